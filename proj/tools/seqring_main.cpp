#include "seqring/guess.hpp"
#include "seqring/json_io.hpp"
#include "seqring/parser.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

namespace {

using namespace seqring;

struct RunConfig {
    std::int64_t horizon = 2000;
    std::uint64_t window = 400;
    std::uint64_t max_period = 60;
    std::size_t degree_bound = 1;
    bool as_json = false;
    std::uint64_t seed = 1;

    void validate() const {
        if (horizon <= 0 || window == 0 || max_period == 0 || degree_bound == 0) {
            throw WindowTooSmallError("configuration values must be positive");
        }
        if (static_cast<std::uint64_t>(horizon) < 4 * window) {
            throw WindowTooSmallError("horizon must be at least four verification windows");
        }
        if (window < 2 * max_period) {
            throw WindowTooSmallError("verification window must cover twice the maximal period");
        }
    }
};

json read_payload(const std::string& path) {
    if (path.empty() || path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file: " + path);
    return json::parse(in);
}

Equation equation_from_payload(const json& j) {
    if (j.contains("equation")) return equation_from_json(j.at("equation"));
    throw Error("payload needs an \"equation\" object");
}

LinSystem system_from_payload(const json& j) {
    if (j.contains("system")) return LinSystem(matk_from_json(j.at("system")));
    if (j.contains("equation")) return companion_matrix(equation_from_json(j.at("equation")));
    throw Error("payload needs a \"system\" matrix or an \"equation\" object");
}

std::vector<Rat> init_from_payload(const json& j, std::size_t order) {
    std::vector<Rat> init;
    for (const auto& v : j.at("init")) init.push_back(Rat::parse(v.get<std::string>()));
    if (init.size() != order) {
        throw InvalidEquationError("expected " + std::to_string(order) + " initial values");
    }
    return init;
}

OrbitState state_from_payload(const json& j, const LinSystem& a) {
    if (!j.contains("state")) {
        return OrbitState(start_index(a), QMatrix::identity(a.dim()));
    }
    const json& s = j.at("state");
    return OrbitState(s.at("b").get<std::int64_t>(), qmatrix_from_json(s.at("B")));
}

void emit(const RunConfig& cfg, const json& payload, const std::string& text) {
    if (cfg.as_json) {
        std::cout << payload.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::string preview_values(const ExactSeq& f, std::size_t count) {
    std::ostringstream os;
    for (std::size_t k = 0; k < f.values.size() && k < count; ++k) {
        os << (k ? ", " : "") << f.values[k];
    }
    if (f.values.size() > count) os << ", ...";
    return os.str();
}

std::string format_zero_set(const std::set<std::uint64_t>& zs, std::size_t count = 40) {
    std::ostringstream os;
    os << "{";
    std::size_t k = 0;
    for (std::uint64_t i : zs) {
        if (k == count) {
            os << ", ...";
            break;
        }
        os << (k ? ", " : "") << i;
        ++k;
    }
    os << "}";
    return os.str();
}

ExactSeq solve_from_payload(const json& in, const RunConfig& cfg, Equation& eq_out,
                            std::int64_t& i0_out) {
    Equation eq = equation_from_payload(in);
    LinSystem sys = companion_matrix(eq);
    std::int64_t i0 = start_index(sys);
    std::int64_t s = in.contains("start") ? in.at("start").get<std::int64_t>() : i0;
    ExactSeq f = solve_equation(eq, init_from_payload(in, eq.order), s, cfg.horizon);
    eq_out = std::move(eq);
    i0_out = i0;
    return f;
}

int cmd_solve(const RunConfig& cfg, const std::string& input, bool values_too) {
    json in = read_payload(input);
    Equation eq(1, {RatFunc(Rat(1))});
    std::int64_t i0 = 0;
    ExactSeq f = solve_from_payload(in, cfg, eq, i0);
    std::set<std::uint64_t> zs = zero_set(f);

    json out{{"equation", equation_to_json(eq)},
             {"start_index", i0},
             {"window", {f.start, f.end()}},
             {"zero_set", zs}};
    std::ostringstream text;
    text << "equation: " << eq.str() << "\n"
         << "start index: " << i0 << "\n"
         << "window: [" << f.start << ", " << f.end() << "]\n";
    if (values_too) {
        out["sequence"] = seq_to_json(f);
        text << "values: " << preview_values(f, 16) << "\n";
    }
    text << "zero set: " << format_zero_set(zs) << " (" << zs.size() << " in window)\n";
    emit(cfg, out, text.str());
    return 0;
}

int cmd_decompose(const RunConfig& cfg, const std::string& input) {
    json in = read_payload(input);
    Equation eq(1, {RatFunc(Rat(1))});
    std::int64_t i0 = 0;
    ExactSeq f = solve_from_payload(in, cfg, eq, i0);
    Decomposition dec = decompose_zero_set(f, cfg.max_period, cfg.window);

    json out = decomposition_report(dec, cfg.max_period);
    out["bell_case"] = is_bell_case_equation(eq);
    std::ostringstream text;
    text << "equation: " << eq.str() << "\n"
         << "bell case: " << (is_bell_case_equation(eq) ? "yes" : "no") << "\n"
         << "zero set on [" << dec.window_lo << ", " << dec.window_hi
         << "]: " << ap_str(dec.set) << "\n"
         << "status: " << status_name(dec.status) << "\n";
    emit(cfg, out, text.str());
    return dec.status == DecompStatus::Inconclusive ? 2 : 0;
}

int cmd_orbit(const RunConfig& cfg, const std::string& input) {
    json in = read_payload(input);
    LinSystem sys = system_from_payload(in);
    OrbitState x = state_from_payload(in, sys);
    Subvariety y = subvariety_from_json(in.at("subvariety"), sys.dim());

    std::set<std::uint64_t> hits = orbit_membership_set(sys, x, y, cfg.horizon);
    Decomposition dec = decompose_point_set(hits, x.b, cfg.horizon, cfg.max_period, cfg.window);

    json out{{"membership", hits},
             {"window", {x.b, cfg.horizon}},
             {"apset", apset_to_json(dec.set)},
             {"status", status_name(dec.status)}};
    std::ostringstream text;
    text << "membership on [" << x.b << ", " << cfg.horizon << "]: " << format_zero_set(hits)
         << " (" << hits.size() << " hits)\n"
         << "pattern: " << ap_str(dec.set) << "\n"
         << "status: " << status_name(dec.status) << "\n";
    emit(cfg, out, text.str());
    return dec.status == DecompStatus::Inconclusive ? 2 : 0;
}

int cmd_psi(const RunConfig& cfg, const std::string& input) {
    json in = read_payload(input);
    LinSystem sys = system_from_payload(in);
    OrbitState x = state_from_payload(in, sys);
    const json& fj = in.at("function");
    RegularFunction f = fj.is_string() ? parse_regular(fj.get<std::string>(), sys.dim())
                                       : regular_from_json(fj, sys.dim());

    ExactSeq seq = evaluate_along_orbit(f, sys, x, cfg.horizon);
    std::set<std::uint64_t> zs = zero_set(seq);
    json out{{"function", regular_to_json(f)},
             {"sequence", seq_to_json(seq)},
             {"zero_set", zs}};
    std::ostringstream text;
    text << "function: " << f.str() << "\n"
         << "window: [" << seq.start << ", " << seq.end() << "]\n"
         << "values: " << preview_values(seq, 16) << "\n"
         << "zero set: " << format_zero_set(zs) << "\n";
    emit(cfg, out, text.str());
    return 0;
}

int cmd_guess(const RunConfig& cfg, const std::string& input, std::size_t max_order) {
    json in = read_payload(input);
    ExactSeq f = seq_from_json(in.at("sequence"));
    std::size_t m = in.value("max_order", max_order);
    std::size_t d = in.value("max_degree", cfg.degree_bound);

    std::optional<Equation> eq = guess_recurrence(f, m, d);
    if (!eq) {
        emit(cfg, json{{"result", "none"}}, "no recurrence within bounds\n");
        return 2;
    }
    json out{{"result", "found"}, {"equation", equation_to_json(*eq)}};
    emit(cfg, out, "equation: " + eq->str() + "\n");
    return 0;
}

int cmd_bell_check(const RunConfig& cfg, const std::string& input) {
    json in = read_payload(input);
    bool bell = false;
    std::string kind;
    if (in.contains("equation")) {
        bell = is_bell_case_equation(equation_from_json(in.at("equation")));
        kind = "equation";
    } else if (in.contains("system")) {
        bell = is_bell_case_system(matk_from_json(in.at("system")));
        kind = "system";
    } else if (in.contains("matrix")) {
        bell = is_bell_case_system(matk_from_json(in.at("matrix")));
        kind = "system";
    } else {
        throw Error("payload needs an \"equation\" or \"system\"");
    }
    emit(cfg, json{{"bell_case", bell}, {"kind", kind}},
         std::string("bell case: ") + (bell ? "yes" : "no") + "\n");
    return 0;
}

int cmd_period_bound(const RunConfig& cfg, const std::string& input) {
    json in = read_payload(input);
    LinSystem sys = system_from_payload(in);
    PeriodBound pb =
        pv_period_lower_bound(sys, cfg.degree_bound, cfg.horizon, cfg.max_period, cfg.window);

    std::vector<APSet> sets;
    for (const PeriodWitness& w : pb.witnesses) sets.push_back(w.set);
    bool consistent = verify_period_bound(sets, pb.bound);
    if (!consistent) throw NotConstantError("period bound fails its own divisibility check");

    json ws = json::array();
    for (const PeriodWitness& w : pb.witnesses) {
        ws.push_back(json{{"element", w.name},
                          {"apset", apset_to_json(w.set)},
                          {"status", status_name(w.status)}});
    }
    json out{{"bound", pb.bound},
             {"candidates_checked", pb.candidates_checked},
             {"witnesses", std::move(ws)},
             {"periods_checked", cfg.max_period}};
    std::ostringstream text;
    text << "period lower bound: " << pb.bound << "\n"
         << "candidates checked: " << pb.candidates_checked << "\n";
    for (const PeriodWitness& w : pb.witnesses) {
        text << "  witness: " << w.name << " vanishes on " << ap_str(w.set) << " ("
             << status_name(w.status) << ")\n";
    }
    emit(cfg, out, text.str());
    return 0;
}

int cmd_demo(const RunConfig& cfg) {
    json checks = json::array();
    std::ostringstream text;
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok, const std::string& detail) {
        checks.push_back(json{{"check", name}, {"ok", ok}, {"detail", detail}});
        text << (ok ? "ok   " : "FAIL ") << name << ": " << detail << "\n";
        all_ok = all_ok && ok;
    };

    Equation fib(2, {RatFunc(Rat(-1)), RatFunc(Rat(-1))});
    LinSystem sys = companion_matrix(fib);

    ExactSeq f = solve_equation(fib, {Rat(0), Rat(1)}, 0, cfg.horizon);
    record("value f(30)", f.at(30) == Rat(832040), "f(30) = " + f.at(30).str());

    Decomposition dec = decompose_zero_set(f, cfg.max_period, cfg.window);
    record("finite zero set",
           dec.status == DecompStatus::ExactFinite && dec.set == ap_finite({0}),
           "zero set " + ap_str(dec.set) + ", status " + status_name(dec.status));

    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> small(-9, 9);
    bool random_ok = true;
    for (int t = 0; t < 5; ++t) {
        Rat a(small(rng)), b(small(rng));
        if (a.is_zero() && b.is_zero()) a = Rat(1);
        ExactSeq g = solve_equation(fib, {a, b}, 0, cfg.horizon);
        Decomposition d2 = decompose_zero_set(g, cfg.max_period, cfg.window);
        random_ok = random_ok && d2.status == DecompStatus::ExactFinite;
    }
    record("random solutions have finite zero sets", random_ok, "5 seeded trials");

    PeriodBound pb =
        pv_period_lower_bound(sys, cfg.degree_bound, cfg.horizon, cfg.max_period, cfg.window);
    bool witness_found = false;
    for (const PeriodWitness& w : pb.witnesses) {
        if (w.name == "det Y + 1" && w.set == ap_progression(1, 2)) witness_found = true;
    }
    record("period lower bound", pb.bound == 2, "bound = " + std::to_string(pb.bound));
    record("witness det Y + 1 on 1 + 2N", witness_found,
           std::to_string(pb.witnesses.size()) + " witnesses");

    RegularFunction detz = RegularFunction::det_z(2);
    record("shift action negates det Z",
           sigma_action(detz, sys) == detz.scaled(RatFunc(Rat(-1))), "det A = -1");

    LinSystem one(MatK::identity(1));
    PeriodBound pb1 =
        pv_period_lower_bound(one, cfg.degree_bound, cfg.horizon, cfg.max_period, cfg.window);
    record("identity system bound", pb1.bound == 1, "bound = " + std::to_string(pb1.bound));

    json out{{"checks", std::move(checks)}, {"all_ok", all_ok}};
    emit(cfg, out, text.str());
    return all_ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of linear difference equations: solutions, zero sets,"
                 " arithmetic-progression decompositions and orbit membership"};
    app.fallthrough();
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--horizon", cfg.horizon, "working horizon H")->capture_default_str();
    app.add_option("--window", cfg.window, "verification window V")->capture_default_str();
    app.add_option("--max-period", cfg.max_period, "largest modulus tried L")
        ->capture_default_str();
    app.add_option("--degree-bound", cfg.degree_bound, "monomial/coefficient degree bound")
        ->capture_default_str();
    app.add_flag("--json", cfg.as_json, "emit machine-readable JSON");
    app.add_option("--seed", cfg.seed, "seed for randomized demo checks")->capture_default_str();

    std::string input = "-";
    std::size_t guess_order = 4;
    int rc = 0;

    auto* solve = app.add_subcommand("solve", "solve an equation and report the window");
    solve->add_option("input", input, "JSON payload file, - for stdin");
    solve->callback([&] {
        cfg.validate();
        rc = cmd_solve(cfg, input, true); });

    auto* zeros = app.add_subcommand("zeros", "zero set of a solution");
    zeros->add_option("input", input, "JSON payload file, - for stdin");
    zeros->callback([&] {
        cfg.validate();
        rc = cmd_solve(cfg, input, false); });

    auto* dec = app.add_subcommand("decompose", "decompose a solution's zero set");
    dec->add_option("input", input, "JSON payload file, - for stdin");
    dec->callback([&] {
        cfg.validate();
        rc = cmd_decompose(cfg, input); });

    auto* orb = app.add_subcommand("orbit", "orbit membership in a subvariety");
    orb->add_option("input", input, "JSON payload file, - for stdin");
    orb->callback([&] {
        cfg.validate();
        rc = cmd_orbit(cfg, input); });

    auto* psi = app.add_subcommand("psi", "evaluate a regular function along an orbit");
    psi->add_option("input", input, "JSON payload file, - for stdin");
    psi->callback([&] {
        cfg.validate();
        rc = cmd_psi(cfg, input); });

    auto* guess = app.add_subcommand("guess", "fit a recurrence to values");
    guess->add_option("input", input, "JSON payload file, - for stdin");
    guess->add_option("--max-order", guess_order, "largest order tried")->capture_default_str();
    guess->callback([&] {
        cfg.validate();
        rc = cmd_guess(cfg, input, guess_order); });

    auto* bell = app.add_subcommand("bell-check", "polynomial coefficients, constant determinant?");
    bell->add_option("input", input, "JSON payload file, - for stdin");
    bell->callback([&] {
        cfg.validate();
        rc = cmd_bell_check(cfg, input); });

    auto* period = app.add_subcommand("period-bound", "empirical period lower bound");
    period->add_option("input", input, "JSON payload file, - for stdin");
    period->callback([&] {
        cfg.validate();
        rc = cmd_period_bound(cfg, input); });

    auto* demo = app.add_subcommand("demo", "run the built-in walkthrough with self-checks");
    demo->callback([&] {
        cfg.validate();
        rc = cmd_demo(cfg); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const NotConstantError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const NotASolutionError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}
