#include "modtab/cli.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "modtab/errors.hpp"
#include "modtab/json_io.hpp"
#include "modtab/modring.hpp"
#include "modtab/primes.hpp"
#include "modtab/proofs.hpp"
#include "modtab/tables.hpp"
#include "modtab/unit_group.hpp"

namespace modtab::cli {

namespace {

using nlohmann::json;

constexpr const char* kSieveEnvVar = "MODTAB_SIEVE_LIMIT";

std::string join(const std::vector<std::uint64_t>& xs, const char* sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out << (i ? sep : "") << xs[i];
    }
    return out.str();
}

CLI::Option* add_format(CLI::App* cmd, std::string& format) {
    return cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->multi_option_policy(CLI::MultiOptionPolicy::Throw)
        ->default_val("text");
}

CLI::Option* add_sieve_limit(CLI::App* cmd, std::uint64_t& limit) {
    return cmd->add_option("--sieve-limit", limit, "prime sieve bound")
        ->envname(kSieveEnvVar)
        ->default_val(kDefaultSieveLimit);
}

std::string witness_text(const DiagonalReport& r) {
    if (!r.witness) return "";
    std::ostringstream out;
    out << " witness=(" << r.witness->first << "," << r.witness->second << ")";
    return out.str();
}

void print_check_text(std::ostream& out, const DiagonalReport& r) {
    out << "n=" << r.n << " method=" << to_string(r.method)
        << " holds=" << (r.holds ? "true" : "false") << witness_text(r) << '\n';
}

void print_check_csv(std::ostream& out, const DiagonalReport& r) {
    out << r.n << ',' << (r.holds ? "true" : "false") << ',';
    if (r.witness) {
        out << r.witness->first << ',' << r.witness->second;
    } else {
        out << ',';
    }
    out << ',' << to_string(r.method) << '\n';
}

void print_verdict_text(std::ostream& out, const ProofVerdict& v) {
    const char* overall = v.overall == ProofOutcome::pass ? "true"
                          : v.overall == ProofOutcome::fail ? "false"
                                                            : "inconclusive";
    out << "proof=" << to_string(v.proof) << " overall=" << overall << '\n';
    for (const auto& step : v.steps) {
        out << (step.checked ? "[ok]   " : "[FAIL] ") << step.description
            << " | evidence=" << step.evidence.dump() << '\n';
    }
}

int verdict_exit(const ProofVerdict& v) {
    switch (v.overall) {
        case ProofOutcome::pass: return kExitHolds;
        case ProofOutcome::fail: return kExitFails;
        case ProofOutcome::inconclusive: return kExitInconclusive;
    }
    return kExitUsage;
}

int emit_verdict(const ProofVerdict& v, const std::string& format,
                 std::ostream& out) {
    if (format == "json") {
        out << to_json(v).dump() << '\n';
    } else if (format == "csv") {
        for (const auto& step : v.steps) {
            out << '"' << step.description << "\","
                << (step.checked ? "true" : "false") << '\n';
        }
        out << "overall,"
            << (v.overall == ProofOutcome::pass ? "true"
                : v.overall == ProofOutcome::fail ? "false" : "inconclusive")
            << '\n';
    } else {
        print_verdict_text(out, v);
    }
    return verdict_exit(v);
}

DiagonalReport run_method(std::uint64_t n, DiagonalMethod m,
                          std::uint64_t table_cap) {
    switch (m) {
        case DiagonalMethod::table: return check_diagonal_table(n, table_cap);
        case DiagonalMethod::units: return check_diagonal_units(n);
        case DiagonalMethod::structural: return check_diagonal_structural(n);
    }
    throw std::logic_error("unreachable");
}

struct CheckConfig {
    std::uint64_t n = 0;
    std::string method = "all";
    std::uint64_t table_cap = kDefaultPairScanCap;
    std::string format = "text";
};

int run_check(const CheckConfig& cfg, std::ostream& out) {
    if (cfg.method != "all") {
        const DiagonalMethod m = cfg.method == "brute" ? DiagonalMethod::table
                                 : cfg.method == "units"
                                     ? DiagonalMethod::units
                                     : DiagonalMethod::structural;
        const auto report = run_method(cfg.n, m, cfg.table_cap);
        if (cfg.format == "json") {
            out << to_json(report).dump() << '\n';
        } else if (cfg.format == "csv") {
            print_check_csv(out, report);
        } else {
            print_check_text(out, report);
        }
        return report.holds ? kExitHolds : kExitFails;
    }

    // Cross-validate every applicable method; the brute table scan only
    // joins below its cap.
    std::vector<DiagonalReport> reports;
    if (cfg.n <= cfg.table_cap) {
        reports.push_back(check_diagonal_table(cfg.n, cfg.table_cap));
    }
    reports.push_back(check_diagonal_units(cfg.n));
    reports.push_back(check_diagonal_structural(cfg.n));
    const bool agree =
        std::all_of(reports.begin(), reports.end(), [&](const auto& r) {
            return r.holds == reports.front().holds;
        });
    const bool holds = agree && reports.front().holds;
    if (cfg.format == "json") {
        json methods = json::array();
        for (const auto& r : reports) methods.push_back(to_json(r));
        out << json{{"n", cfg.n},
                    {"agree", agree},
                    {"holds", holds},
                    {"methods", methods}}
                   .dump()
            << '\n';
    } else if (cfg.format == "csv") {
        for (const auto& r : reports) print_check_csv(out, r);
        out << "agree," << (agree ? "true" : "false") << '\n';
    } else {
        for (const auto& r : reports) print_check_text(out, r);
        out << "agree=" << (agree ? "true" : "false") << '\n';
    }
    if (!agree) return kExitFails;
    return holds ? kExitHolds : kExitFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"modular multiplication tables, unit groups and the "
                 "divisors of 24"};
    app.name("modtab");
    app.require_subcommand(1);

    // ---- table ----
    auto* table_cmd =
        app.add_subcommand("table", "render the multiplication table of Z_n");
    std::uint64_t table_n = 0;
    std::uint64_t table_cap = kDefaultRenderCap;
    std::string table_format;
    table_cmd->add_option("--n", table_n, "modulus")->required();
    table_cmd->add_option("--cap", table_cap, "render size cap");
    add_format(table_cmd, table_format);

    // ---- check ----
    auto* check_cmd = app.add_subcommand(
        "check", "test whether 1's appear only on the diagonal");
    CheckConfig check_cfg;
    check_cmd->add_option("--n", check_cfg.n, "modulus")->required();
    check_cmd->add_option("--method", check_cfg.method, "decision method")
        ->check(CLI::IsMember({"brute", "units", "structural", "all"}))
        ->default_val("all");
    check_cmd->add_option("--table-cap", check_cfg.table_cap,
                          "pair-scan cap for the brute method");
    add_format(check_cmd, check_cfg.format);

    // ---- scan ----
    auto* scan_cmd = app.add_subcommand(
        "scan", "classify every modulus up to a bound");
    std::uint64_t scan_max = 0;
    std::string scan_method = "structural";
    std::uint64_t scan_table_cap = kDefaultPairScanCap;
    std::string scan_format;
    scan_cmd->add_option("--max", scan_max, "largest modulus")->required();
    scan_cmd->add_option("--method", scan_method, "decision method")
        ->check(CLI::IsMember({"brute", "units", "structural"}))
        ->default_val("structural");
    scan_cmd->add_option("--table-cap", scan_table_cap,
                         "pair-scan cap for the brute method");
    add_format(scan_cmd, scan_format);

    // ---- units ----
    auto* units_cmd = app.add_subcommand(
        "units", "list the units of Z_n and their group structure");
    std::uint64_t units_n = 0;
    std::string units_format;
    units_cmd->add_option("--n", units_n, "modulus")->required();
    add_format(units_cmd, units_format);

    // ---- cube ----
    auto* cube_cmd = app.add_subcommand(
        "cube", "diagonal question for the multiplication cube");
    std::uint64_t cube_n = 0;
    std::uint64_t cube_max = 0;
    std::uint64_t cube_cap = kDefaultCubeCap;
    bool cube_do_scan = false;
    std::string cube_format;
    auto* cube_n_opt = cube_cmd->add_option("--n", cube_n, "single modulus");
    auto* cube_scan_opt =
        cube_cmd->add_flag("--scan", cube_do_scan, "classify a range");
    auto* cube_max_opt =
        cube_cmd->add_option("--max", cube_max, "largest modulus for --scan");
    cube_cmd->add_option("--cap", cube_cap, "triple-scan cap");
    cube_n_opt->excludes(cube_scan_opt);
    cube_scan_opt->needs(cube_max_opt);
    add_format(cube_cmd, cube_format);

    // ---- primes ----
    auto* primes_cmd =
        app.add_subcommand("primes", "sieve-backed prime queries");
    primes_cmd->require_subcommand(1);
    std::uint64_t sieve_limit = kDefaultSieveLimit;
    std::string primes_format = "text";

    auto* pi_cmd = primes_cmd->add_subcommand("pi", "count primes <= x");
    std::uint64_t pi_x = 0;
    pi_cmd->add_option("--x", pi_x, "upper bound")->required();
    add_sieve_limit(pi_cmd, sieve_limit);
    add_format(pi_cmd, primes_format);

    auto* bert_cmd = primes_cmd->add_subcommand(
        "bertrand", "smallest prime strictly between n and 2n");
    std::uint64_t bert_n = 0;
    bert_cmd->add_option("--n", bert_n, "lower endpoint")->required();
    add_sieve_limit(bert_cmd, sieve_limit);
    add_format(bert_cmd, primes_format);

    auto* erdos_cmd = primes_cmd->add_subcommand(
        "erdos", "two smallest primes strictly between n and 2n");
    std::uint64_t erdos_n = 0;
    erdos_cmd->add_option("--n", erdos_n, "lower endpoint")->required();
    add_sieve_limit(erdos_cmd, sieve_limit);
    add_format(erdos_cmd, primes_format);

    auto* ram_cmd = primes_cmd->add_subcommand(
        "ramanujan", "thresholds p_k with pi(x) - pi(x/2) >= k for x >= p_k");
    std::uint64_t ram_count = 5;
    ram_cmd->add_option("--count", ram_count, "how many thresholds");
    add_sieve_limit(ram_cmd, sieve_limit);
    add_format(ram_cmd, primes_format);

    auto* dir_cmd = primes_cmd->add_subcommand(
        "dirichlet", "smallest prime in the progression q*x + r");
    DirichletQuery dir_query;
    std::uint64_t dir_bound = 0;
    dir_cmd->add_option("--q", dir_query.q, "progression modulus (prime)")
        ->required();
    dir_cmd->add_option("--r", dir_query.r, "residue class")->required();
    dir_cmd->add_option("--avoid", dir_query.avoid,
                        "skip primes dividing this value");
    dir_cmd->add_option("--bound", dir_bound, "search cap");
    add_sieve_limit(dir_cmd, sieve_limit);
    add_format(dir_cmd, primes_format);

    auto* nondiv_cmd = primes_cmd->add_subcommand(
        "nondividing", "smallest prime that does not divide n");
    std::uint64_t nondiv_n = 0;
    nondiv_cmd->add_option("--n", nondiv_n, "value to avoid dividing")
        ->required();
    add_sieve_limit(nondiv_cmd, sieve_limit);
    add_format(nondiv_cmd, primes_format);

    // ---- verify ----
    auto* verify_cmd =
        app.add_subcommand("verify", "replay one of the written arguments");
    verify_cmd->require_subcommand(1);
    std::string verify_format = "text";
    std::uint64_t verify_sieve = kDefaultSieveLimit;

    auto* vcrt_cmd = verify_cmd->add_subcommand(
        "crt", "two-adic split argument over a range of moduli");
    std::uint64_t vcrt_limit = 1000;
    vcrt_cmd->add_option("--limit", vcrt_limit, "range bound");
    add_format(vcrt_cmd, verify_format);

    auto* vdir_cmd = verify_cmd->add_subcommand(
        "dirichlet", "arithmetic-progression argument for one modulus");
    std::uint64_t vdir_n = 24;
    std::uint64_t vdir_bound = 0;
    vdir_cmd->add_option("--n", vdir_n, "modulus");
    vdir_cmd->add_option("--bound", vdir_bound, "witness search cap");
    add_sieve_limit(vdir_cmd, verify_sieve);
    add_format(vdir_cmd, verify_format);

    auto* vunits_cmd = verify_cmd->add_subcommand(
        "units", "unit-group classification against brute-force orders");
    std::uint64_t vunits_max = 10000;
    vunits_cmd->add_option("--max", vunits_max, "largest prime power");
    add_sieve_limit(vunits_cmd, verify_sieve);
    add_format(vunits_cmd, verify_format);

    auto* vbert_cmd = verify_cmd->add_subcommand(
        "bertrand", "prime-gap contrapositive with two intervals");
    std::uint64_t vbert_limit = 100000;
    vbert_cmd->add_option("--limit", vbert_limit, "harvest bound");
    add_sieve_limit(vbert_cmd, verify_sieve);
    add_format(vbert_cmd, verify_format);

    auto* verdos_cmd = verify_cmd->add_subcommand(
        "erdos", "prime-gap contrapositive with a single interval");
    std::uint64_t verdos_limit = 100000;
    verdos_cmd->add_option("--limit", verdos_limit, "harvest bound");
    add_sieve_limit(verdos_cmd, verify_sieve);
    add_format(verdos_cmd, verify_format);

    auto* vprop_cmd = verify_cmd->add_subcommand(
        "proposition", "equivalence of the four diagonal-property statements");
    std::uint64_t vprop_n = 24;
    std::uint64_t vprop_bound = 10000;
    vprop_cmd->add_option("--n", vprop_n, "modulus");
    vprop_cmd->add_option("--prime-bound", vprop_bound,
                          "sample bound for statement 4");
    add_sieve_limit(vprop_cmd, verify_sieve);
    add_format(vprop_cmd, verify_format);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitHolds;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*table_cmd) {
            const auto matrix = render_table(ResidueRing(table_n), table_cap);
            if (table_format == "json") {
                out << json{{"n", table_n}, {"matrix", matrix}}.dump() << '\n';
            } else if (table_format == "csv") {
                out << format_table_csv(matrix);
            } else {
                out << format_table_text(matrix);
            }
            return kExitHolds;
        }

        if (*check_cmd) {
            return run_check(check_cfg, out);
        }

        if (*scan_cmd) {
            std::vector<std::uint64_t> holds;
            for (std::uint64_t n = 1; n <= scan_max; ++n) {
                DiagonalReport r;
                if (scan_method == "brute") {
                    r = check_diagonal_table(n, scan_table_cap);
                } else if (scan_method == "units") {
                    r = check_diagonal_units(n);
                } else {
                    r = check_diagonal_structural(n);
                }
                if (r.holds) holds.push_back(n);
            }
            if (scan_format == "json") {
                out << json{{"max", scan_max},
                            {"method", scan_method},
                            {"holds", holds}}
                           .dump()
                    << '\n';
            } else if (scan_format == "csv") {
                out << join(holds, ",") << '\n';
            } else {
                out << join(holds, " ") << '\n';
            }
            return kExitHolds;
        }

        if (*units_cmd) {
            const ResidueRing ring(units_n);
            const auto elements = ring.units();
            const auto structure = unit_group_structure(units_n);
            const bool f2 = is_f2_vector_space(units_n);
            if (units_format == "json") {
                out << json{{"n", units_n},
                            {"phi", euler_phi(units_n)},
                            {"cyclic_orders", structure.cyclic_orders},
                            {"exponent", structure.exponent},
                            {"f2_vector_space", f2},
                            {"units", elements}}
                           .dump()
                    << '\n';
            } else if (units_format == "csv") {
                out << "n," << units_n << '\n'
                    << "phi," << euler_phi(units_n) << '\n'
                    << "cyclic_orders," << join(structure.cyclic_orders, " ")
                    << '\n'
                    << "exponent," << structure.exponent << '\n'
                    << "f2_vector_space," << (f2 ? "true" : "false") << '\n'
                    << "units," << join(elements, " ") << '\n';
            } else {
                out << "n=" << units_n << '\n'
                    << "phi=" << euler_phi(units_n) << '\n'
                    << "cyclic_orders=" << join(structure.cyclic_orders, " ")
                    << '\n'
                    << "exponent=" << structure.exponent << '\n'
                    << "f2_vector_space=" << (f2 ? "true" : "false") << '\n'
                    << "units=" << join(elements, " ") << '\n';
            }
            return kExitHolds;
        }

        if (*cube_cmd) {
            if (!cube_do_scan && cube_n_opt->count() == 0) {
                err << "usage error: cube needs --n or --scan --max\n";
                return kExitUsage;
            }
            if (cube_do_scan) {
                const auto holds = cube_scan(cube_max, cube_cap);
                if (cube_format == "json") {
                    out << json{{"max", cube_max}, {"holds", holds}}.dump()
                        << '\n';
                } else if (cube_format == "csv") {
                    out << join(holds, ",") << '\n';
                } else {
                    out << join(holds, " ") << '\n';
                }
                return kExitHolds;
            }
            const auto report = cube_check(cube_n, cube_cap);
            if (cube_format == "json") {
                out << to_json(report).dump() << '\n';
            } else if (cube_format == "csv") {
                out << report.n << ',' << (report.holds ? "true" : "false");
                if (report.witness) {
                    out << ',' << (*report.witness)[0] << ','
                        << (*report.witness)[1] << ',' << (*report.witness)[2];
                }
                out << '\n';
            } else {
                out << "n=" << report.n
                    << " holds=" << (report.holds ? "true" : "false");
                if (report.witness) {
                    out << " witness=(" << (*report.witness)[0] << ","
                        << (*report.witness)[1] << "," << (*report.witness)[2]
                        << ")";
                }
                out << '\n';
            }
            return report.holds ? kExitHolds : kExitFails;
        }

        if (*primes_cmd) {
            const PrimeTable table(sieve_limit);
            std::uint64_t value = 0;
            std::vector<std::uint64_t> values;
            std::string op;
            if (*pi_cmd) {
                op = "pi";
                value = table.pi(pi_x);
                values = {value};
            } else if (*bert_cmd) {
                op = "bertrand";
                value = bertrand_witness(table, bert_n);
                values = {value};
            } else if (*erdos_cmd) {
                op = "erdos";
                const auto [p1, p2] = erdos_witnesses(table, erdos_n);
                values = {p1, p2};
            } else if (*ram_cmd) {
                op = "ramanujan";
                values = ramanujan_primes(table, ram_count);
            } else if (*nondiv_cmd) {
                op = "nondividing";
                value = smallest_nondividing_prime(table, nondiv_n);
                values = {value};
            } else if (*dir_cmd) {
                op = "dirichlet";
                dir_query.bound = dir_bound ? dir_bound : table.limit();
                const auto witness = dirichlet_witness(table, dir_query);
                if (!witness) {
                    if (primes_format == "json") {
                        out << json{{"op", op},
                                    {"witness", nullptr},
                                    {"inconclusive", true}}
                                   .dump()
                            << '\n';
                    } else {
                        out << "inconclusive\n";
                    }
                    return kExitInconclusive;
                }
                values = {*witness};
            }
            if (primes_format == "json") {
                out << json{{"op", op}, {"values", values}}.dump() << '\n';
            } else if (primes_format == "csv") {
                out << join(values, ",") << '\n';
            } else {
                out << join(values, " ") << '\n';
            }
            return kExitHolds;
        }

        if (*verify_cmd) {
            if (*vcrt_cmd) {
                return emit_verdict(verify_proof_crt(vcrt_limit), verify_format,
                                    out);
            }
            const PrimeTable table(verify_sieve);
            ProofVerdict verdict;
            if (*vdir_cmd) {
                const std::uint64_t bound =
                    vdir_bound ? vdir_bound : table.limit();
                verdict = verify_proof_dirichlet(vdir_n, bound, table);
            } else if (*vunits_cmd) {
                verdict = verify_proof_unit_structure(vunits_max, table);
            } else if (*vbert_cmd) {
                verdict = verify_proof_bertrand(vbert_limit, table);
            } else if (*verdos_cmd) {
                verdict = verify_proof_erdos(verdos_limit, table);
            } else if (*vprop_cmd) {
                verdict =
                    verify_proposition_equivalence(vprop_n, vprop_bound, table);
            }
            return emit_verdict(verdict, verify_format, out);
        }
    } catch (const InconclusiveError& e) {
        err << "inconclusive: " << e.what() << '\n';
        return kExitInconclusive;
    } catch (const TheoremViolationError& e) {
        err << "theorem violation: " << e.what() << '\n';
        return kExitFails;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    err << "usage error: no subcommand\n";
    return kExitUsage;
}

}  // namespace modtab::cli
