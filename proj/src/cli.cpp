#include "pgg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

#include "pgg/circuit_io.hpp"
#include "pgg/errors.hpp"
#include "pgg/game_io.hpp"
#include "pgg/map_io.hpp"
#include "pgg/reduction.hpp"
#include "pgg/solvers.hpp"

namespace pgg::cli {

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_rejected = 1;
constexpr int exit_usage = 2;

json equilibrium_json(const EquilibriumReport& report) {
    json players = json::array();
    for (const PlayerCheck& check : report.players) {
        players.push_back({{"player", check.player},
                           {"delta_u", check.delta_u.str()},
                           {"support", to_string(check.support)},
                           {"best_responses", to_string(check.best_responses)},
                           {"violation", check.violation}});
    }
    return json{{"accepted", report.accepted}, {"players", players}};
}

json gate_report_json(const GateReport& report) {
    json gates = json::array();
    for (const GateCheck& check : report.gates)
        gates.push_back({{"gate", check.gate},
                         {"satisfied", check.satisfied},
                         {"violation", check.violation}});
    return json{{"accepted", report.accepted}, {"gates", gates}};
}

json assignment_json(const Assignment& assignment) {
    json values = json::array();
    for (Ternary value : assignment.values) values.push_back(to_string(value));
    return values;
}

void print_equilibrium(std::ostream& out, const EquilibriumReport& report) {
    for (const PlayerCheck& check : report.players) {
        out << "player " << check.player << ": delta_u = " << check.delta_u << ", support "
            << to_string(check.support) << ", best responses "
            << to_string(check.best_responses);
        if (!check.violation.empty()) out << "  VIOLATION: " << check.violation;
        out << "\n";
    }
}

void print_gate_report(std::ostream& out, const GateReport& report) {
    for (const GateCheck& check : report.gates) {
        out << "gate " << check.gate << ": " << (check.satisfied ? "satisfied" : "violated");
        if (!check.violation.empty()) out << " (" << check.violation << ")";
        out << "\n";
    }
}

std::string assignment_line(const Assignment& assignment) {
    std::string line;
    for (std::size_t i = 0; i < assignment.values.size(); ++i) {
        if (i > 0) line += " ";
        line += to_string(assignment.values[i]);
    }
    return line;
}

void write_json_report(const std::string& path, const json& payload) {
    if (path.empty()) return;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot write report file '" + path + "'");
    file << payload.dump(2) << "\n";
}

struct RationalFlag {
    std::string text;

    Rational value() const { return Rational::parse(text); }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Indivisible public goods games on directed graphs: exact equilibrium "
                 "verification, pure-circuit instances, and the gadget reduction "
                 "between them."};
    app.require_subcommand(1);
    int exit_code = exit_ok;

    // compile
    auto* compile_cmd = app.add_subcommand("compile", "Compile a circuit into a game");
    std::string compile_circuit, compile_game_out, compile_map_out, compile_report;
    RationalFlag compile_price, compile_eps;
    compile_cmd->add_option("--circuit", compile_circuit)->required();
    compile_cmd->add_option("--price", compile_price.text)->required();
    compile_cmd->add_option("--epsilon", compile_eps.text)->required();
    compile_cmd->add_option("--game-out", compile_game_out)->required();
    compile_cmd->add_option("--map-out", compile_map_out)->required();
    compile_cmd->add_option("--report", compile_report);
    compile_cmd->callback([&] {
        const CircuitInstance instance = load_circuit(compile_circuit);
        const CompiledGame compiled = compile(instance, compile_price.value(),
                                              compile_eps.value());
        save_text_file(compile_game_out, serialize_game(compiled.game));
        save_text_file(compile_map_out, serialize_map(compiled.map));
        out << "compiled " << instance.node_count << " circuit nodes, "
            << instance.gates.size() << " gates -> game with " << compiled.game.node_count()
            << " nodes, " << compiled.game.edges().size() << " edges (l = "
            << compiled.map.params.chain_l << ")\n";
        write_json_report(compile_report,
                          json{{"command", "compile"},
                               {"accepted", true},
                               {"game_nodes", compiled.game.node_count()},
                               {"game_edges", compiled.game.edges().size()},
                               {"chain_l", compiled.map.params.chain_l}});
        exit_code = exit_ok;
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Verify an equilibrium profile");
    std::string verify_game, verify_profile, verify_mode = "wsne", verify_report;
    RationalFlag verify_eps;
    verify_cmd->add_option("--game", verify_game)->required();
    verify_cmd->add_option("--profile", verify_profile)->required();
    verify_cmd->add_option("--epsilon", verify_eps.text)->required();
    verify_cmd->add_option("--mode", verify_mode)
        ->check(CLI::IsMember({"wsne", "ne", "pure"}));
    verify_cmd->add_option("--report", verify_report);
    verify_cmd->callback([&] {
        const Game game = load_game(verify_game);
        const StrategyProfile profile = load_profile(verify_profile, game.node_count());
        EquilibriumReport report;
        if (verify_mode == "pure") {
            PureProfile pure;
            pure.a.reserve(profile.s.size());
            for (const Rational& s : profile.s) {
                if (s != Rational(0) && s != Rational(1))
                    throw Error("profile entry " + s.str() + " is not pure");
                pure.a.push_back(s == Rational(1) ? 1 : 0);
            }
            report = check_pure_ne(game, pure);
        } else if (verify_mode == "ne") {
            report = check_epsilon_ne(game, profile, verify_eps.value());
        } else {
            report = check_wsne(game, profile, verify_eps.value());
        }
        print_equilibrium(out, report);
        out << verify_mode << " check: " << (report.accepted ? "ACCEPTED" : "REJECTED") << "\n";
        json payload = equilibrium_json(report);
        payload["command"] = "verify";
        payload["mode"] = verify_mode;
        write_json_report(verify_report, payload);
        exit_code = report.accepted ? exit_ok : exit_rejected;
    });

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Search for an equilibrium");
    std::string solve_game, solve_method = "grid", solve_profile_out, solve_report;
    RationalFlag solve_eps;
    SolverConfig solve_config;
    solve_cmd->add_option("--game", solve_game)->required();
    solve_cmd->add_option("--epsilon", solve_eps.text)->required();
    solve_cmd->add_option("--method", solve_method)
        ->check(CLI::IsMember({"pure", "grid", "dynamics"}));
    solve_cmd->add_option("--grid-denominator", solve_config.grid_denominator);
    solve_cmd->add_option("--seed", solve_config.seed);
    solve_cmd->add_option("--restarts", solve_config.restarts);
    solve_cmd->add_option("--max-iters", solve_config.max_iterations);
    solve_cmd->add_option("--profile-out", solve_profile_out)->required();
    solve_cmd->add_option("--report", solve_report);
    solve_cmd->callback([&] {
        const Game game = load_game(solve_game);
        const Rational epsilon = solve_eps.value();
        std::optional<StrategyProfile> found;
        if (solve_method == "pure") {
            const auto pure = solve_pure_enum(game);
            if (!pure.empty()) {
                found = to_strategy_profile(pure.front());
                out << "pure equilibria found: " << pure.size() << "\n";
            }
        } else if (solve_method == "grid") {
            found = solve_grid(game, epsilon, solve_config);
        } else {
            found = solve_dynamics(game, epsilon, solve_config);
        }
        json payload{{"command", "solve"}, {"method", solve_method}, {"accepted", found.has_value()}};
        if (found) {
            save_text_file(solve_profile_out, serialize_profile(*found));
            out << "equilibrium written to " << solve_profile_out << "\n";
            json values = json::array();
            for (const Rational& s : found->s) values.push_back(s.str());
            payload["profile"] = values;
            exit_code = exit_ok;
        } else {
            out << "no equilibrium found\n";
            exit_code = exit_rejected;
        }
        write_json_report(solve_report, payload);
    });

    // lift
    auto* lift_cmd = app.add_subcommand("lift", "Lift a game profile to a circuit assignment");
    std::string lift_map, lift_profile_path, lift_out, lift_report;
    RationalFlag lift_tolerance{"0"};
    lift_cmd->add_option("--map", lift_map)->required();
    lift_cmd->add_option("--profile", lift_profile_path)->required();
    lift_cmd->add_option("--tolerance", lift_tolerance.text);
    lift_cmd->add_option("--assignment-out", lift_out)->required();
    lift_cmd->add_option("--report", lift_report);
    lift_cmd->callback([&] {
        const ReductionMap map = load_map(lift_map);
        const StrategyProfile profile = load_profile(lift_profile_path, map.game_node_count());
        const Assignment assignment = lift_profile(map, profile, lift_tolerance.value());
        save_text_file(lift_out, serialize_assignment(assignment));
        out << "lift: " << assignment_line(assignment) << "\n";
        write_json_report(lift_report, json{{"command", "lift"},
                                            {"accepted", true},
                                            {"assignment", assignment_json(assignment)}});
        exit_code = exit_ok;
    });

    // verify-reduction
    auto* vr_cmd = app.add_subcommand("verify-reduction",
                                      "Compile, verify the profile, lift, and check the gates");
    std::string vr_circuit, vr_profile, vr_report;
    RationalFlag vr_price, vr_eps;
    vr_cmd->add_option("--circuit", vr_circuit)->required();
    vr_cmd->add_option("--price", vr_price.text)->required();
    vr_cmd->add_option("--epsilon", vr_eps.text)->required();
    vr_cmd->add_option("--profile", vr_profile)->required();
    vr_cmd->add_option("--report", vr_report);
    vr_cmd->callback([&] {
        const CircuitInstance instance = load_circuit(vr_circuit);
        const Rational price = vr_price.value();
        const Rational epsilon = vr_eps.value();
        const CompiledGame compiled = compile(instance, price, epsilon);
        const StrategyProfile profile = load_profile(vr_profile, compiled.game.node_count());
        const ReductionCheck check = verify_reduction(instance, price, epsilon, profile);
        print_equilibrium(out, check.equilibrium);
        out << "stage 1 (wsne at eps): "
            << (check.equilibrium.accepted ? "ACCEPTED" : "REJECTED") << "\n";
        out << "lift: " << assignment_line(check.lifted) << "\n";
        print_gate_report(out, check.circuit);
        out << "stage 2 (circuit gates): "
            << (check.circuit.accepted ? "ACCEPTED" : "REJECTED") << "\n";
        if (check.failed_stage == 0) out << "reduction check: ACCEPTED\n";
        else out << "reduction check: REJECTED at stage " << check.failed_stage << "\n";
        write_json_report(vr_report,
                          json{{"command", "verify-reduction"},
                               {"accepted", check.failed_stage == 0},
                               {"failed_stage", check.failed_stage},
                               {"equilibrium", equilibrium_json(check.equilibrium)},
                               {"lift", assignment_json(check.lifted)},
                               {"circuit", gate_report_json(check.circuit)}});
        exit_code = check.failed_stage == 0 ? exit_ok : exit_rejected;
    });

    // check-circuit
    auto* cc_cmd = app.add_subcommand("check-circuit", "Check an assignment against the gates");
    std::string cc_circuit, cc_assignment, cc_report;
    cc_cmd->add_option("--circuit", cc_circuit)->required();
    cc_cmd->add_option("--assignment", cc_assignment)->required();
    cc_cmd->add_option("--report", cc_report);
    cc_cmd->callback([&] {
        const CircuitInstance instance = load_circuit(cc_circuit);
        require_valid_instance(instance);
        const Assignment assignment = load_assignment(cc_assignment, instance.node_count);
        const GateReport report = check_assignment(instance, assignment);
        print_gate_report(out, report);
        out << "circuit check: " << (report.accepted ? "ACCEPTED" : "REJECTED") << "\n";
        json payload = gate_report_json(report);
        payload["command"] = "check-circuit";
        write_json_report(cc_report, payload);
        exit_code = report.accepted ? exit_ok : exit_rejected;
    });

    // solve-circuit
    auto* sc_cmd = app.add_subcommand("solve-circuit", "Enumerate all satisfying assignments");
    std::string sc_circuit, sc_report;
    std::uint32_t sc_limit = 12;
    sc_cmd->add_option("--circuit", sc_circuit)->required();
    sc_cmd->add_option("--limit", sc_limit);
    sc_cmd->add_option("--report", sc_report);
    sc_cmd->callback([&] {
        const CircuitInstance instance = load_circuit(sc_circuit);
        const auto solutions = solve_bruteforce(instance, sc_limit);
        out << "solutions: " << solutions.size() << "\n";
        json list = json::array();
        for (const Assignment& solution : solutions) {
            out << assignment_line(solution) << "\n";
            list.push_back(assignment_json(solution));
        }
        write_json_report(sc_report, json{{"command", "solve-circuit"},
                                          {"accepted", !solutions.empty()},
                                          {"solutions", list}});
        exit_code = solutions.empty() ? exit_rejected : exit_ok;
    });

    // gen-circuit
    auto* gen_cmd = app.add_subcommand("gen-circuit", "Generate a random circuit instance");
    std::string gen_out, gen_report;
    std::uint32_t gen_nodes = 0;
    std::uint64_t gen_seed = 0;
    RationalFlag gen_fraction{"1/2"};
    gen_cmd->add_option("--nodes", gen_nodes)->required();
    gen_cmd->add_option("--nor-fraction", gen_fraction.text);
    gen_cmd->add_option("--seed", gen_seed);
    gen_cmd->add_option("--out", gen_out)->required();
    gen_cmd->add_option("--report", gen_report);
    gen_cmd->callback([&] {
        const CircuitInstance instance = generate_random(gen_nodes, gen_fraction.value(), gen_seed);
        save_text_file(gen_out, serialize_circuit(instance));
        out << "generated " << instance.node_count << " nodes, " << instance.gates.size()
            << " gates\n";
        write_json_report(gen_report, json{{"command", "gen-circuit"},
                                           {"accepted", true},
                                           {"nodes", instance.node_count},
                                           {"gates", instance.gates.size()}});
        exit_code = exit_ok;
    });

    // trivial
    auto* trivial_cmd = app.add_subcommand("trivial", "Emit the trivial equilibrium when it exists");
    std::string trivial_game, trivial_out, trivial_report;
    RationalFlag trivial_eps;
    trivial_cmd->add_option("--game", trivial_game)->required();
    trivial_cmd->add_option("--epsilon", trivial_eps.text)->required();
    trivial_cmd->add_option("--profile-out", trivial_out)->required();
    trivial_cmd->add_option("--report", trivial_report);
    trivial_cmd->callback([&] {
        const Game game = load_game(trivial_game);
        const Rational epsilon = trivial_eps.value();
        const Rational threshold = min(game.price(), Rational(1) - game.price());
        if (epsilon < threshold) {
            out << "no trivial equilibrium: eps " << epsilon << " < min{p, 1-p} = "
                << threshold << "\n";
            write_json_report(trivial_report,
                              json{{"command", "trivial"}, {"accepted", false}});
            exit_code = exit_rejected;
            return;
        }
        const StrategyProfile profile = trivial_wsne(game, epsilon);
        save_text_file(trivial_out, serialize_profile(profile));
        const bool all_ones = epsilon >= game.price();
        out << "trivial equilibrium: " << (all_ones ? "all-ones" : "all-zeros") << "\n";
        write_json_report(trivial_report,
                          json{{"command", "trivial"},
                               {"accepted", true},
                               {"branch", all_ones ? "all-ones" : "all-zeros"}});
        exit_code = exit_ok;
    });

    // certify-params
    auto* cert_cmd = app.add_subcommand("certify-params",
                                        "Certify the chain length inequalities exactly");
    std::string cert_report;
    RationalFlag cert_price, cert_eps;
    cert_cmd->add_option("--price", cert_price.text)->required();
    cert_cmd->add_option("--epsilon", cert_eps.text)->required();
    cert_cmd->add_option("--report", cert_report);
    cert_cmd->callback([&] {
        const ParamCertificate cert = certify_params(cert_price.value(), cert_eps.value());
        out << "p = " << cert.price << ", eps = " << cert.epsilon << "\n";
        out << "l = " << cert.chain_l << "\n";
        out << "(p+eps)^l = " << cert.pow_l << " <= p-eps = " << cert.p_minus_eps << " : "
            << (cert.chain_bound_holds ? "ok" : "VIOLATED") << "\n";
        out << "minimality of l : " << (cert.minimal ? "ok" : "VIOLATED") << "\n";
        out << "(p+eps)^(l+1) - p = " << cert.pow_l1_minus_p << " < -eps : "
            << (cert.garbage_bound_holds ? "ok" : "VIOLATED") << "\n";
        const bool all_hold = cert.chain_bound_holds && cert.minimal && cert.garbage_bound_holds;
        write_json_report(cert_report,
                          json{{"command", "certify-params"},
                               {"accepted", all_hold},
                               {"l", cert.chain_l},
                               {"pow_l", cert.pow_l.str()},
                               {"p_minus_eps", cert.p_minus_eps.str()},
                               {"pow_l1_minus_p", cert.pow_l1_minus_p.str()},
                               {"chain_bound_holds", cert.chain_bound_holds},
                               {"minimal", cert.minimal},
                               {"garbage_bound_holds", cert.garbage_bound_holds}});
        exit_code = all_hold ? exit_ok : exit_rejected;
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const pgg::Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_code;
}

} // namespace pgg::cli
