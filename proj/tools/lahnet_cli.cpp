// Command-line front-end: every verification the library offers, as a
// scriptable command with deterministic output.
//
// Exit codes: 0 property verified / output produced; 1 property falsified;
// 2 usage error; 3 guard refusal.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lahnet/lahnet.hpp"

namespace {

using lahnet::BigInt;
using lahnet::ExactMatrix;
using lahnet::IndexSet;
using json = lahnet::json;

constexpr int kExitVerified = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

bool guard_override_env() {
    const char* value = std::getenv("LGV_GUARD_OVERRIDE");
    return value != nullptr && *value != '\0';
}

// --force or LGV_GUARD_OVERRIDE; lifting a guard is always announced.
bool effective_force(bool force_flag) {
    const bool force = force_flag || guard_override_env();
    if (force) std::cerr << "warning: safety guards lifted for this run\n";
    return force;
}

IndexSet parse_index_set(const std::string& text, const std::string& flag) {
    std::vector<std::size_t> indices;
    std::string token;
    auto flush = [&] {
        if (token.empty()) throw lahnet::IndexError(flag + ": empty index in '" + text + "'");
        indices.push_back(std::stoul(token));
        token.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush();
        } else if (c >= '0' && c <= '9') {
            token += c;
        } else if (c != ' ') {
            throw lahnet::IndexError(flag + ": unexpected character '" + std::string(1, c) +
                                     "' in '" + text + "'");
        }
    }
    flush();
    return IndexSet(indices);
}

std::string render_matrix_text(const ExactMatrix& M) {
    std::size_t width = 0;
    for (std::size_t i = 1; i <= M.rows(); ++i)
        for (std::size_t j = 1; j <= M.cols(); ++j) {
            const std::size_t len = lahnet::to_decimal(M.at(i, j)).size();
            if (len > width) width = len;
        }
    std::string out;
    for (std::size_t i = 1; i <= M.rows(); ++i) {
        for (std::size_t j = 1; j <= M.cols(); ++j) {
            std::string cell = lahnet::to_decimal(M.at(i, j));
            if (j > 1) out += ' ';
            out += std::string(width - cell.size(), ' ') + cell;
        }
        out += '\n';
    }
    return out;
}

void print_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

struct TheoremOutcome {
    std::size_t n = 0;
    bool holds = false;
    std::size_t diff_i = 0, diff_j = 0;
    BigInt from_network, from_table;
};

TheoremOutcome compare_weight_matrix(const lahnet::Network& net, const ExactMatrix& expected) {
    TheoremOutcome outcome;
    outcome.n = net.n();
    const ExactMatrix W = lahnet::weight_matrix(net);
    for (std::size_t i = 1; i <= outcome.n; ++i)
        for (std::size_t j = 1; j <= outcome.n; ++j)
            if (W.at(i, j) != expected.at(i, j)) {
                outcome.holds = false;
                outcome.diff_i = i;
                outcome.diff_j = j;
                outcome.from_network = W.at(i, j);
                outcome.from_table = expected.at(i, j);
                return outcome;
            }
    outcome.holds = true;
    return outcome;
}

int cmd_lah(std::size_t n, const std::string& format) {
    const lahnet::LahMatrix lm = lahnet::lah_matrix(n);
    const ExactMatrix& M = lm.matrix();
    if (format == "json") {
        print_json(lahnet::matrix_to_json(M));
    } else if (format == "csv") {
        std::cout << lahnet::matrix_to_csv(M);
    } else if (format == "text") {
        std::cout << render_matrix_text(M);
    } else {
        std::cerr << "lah supports formats text, json, csv\n";
        return kExitUsage;
    }
    return kExitVerified;
}

int cmd_network(std::size_t n, bool unit, const std::string& format) {
    const lahnet::Network net = unit ? lahnet::unit_network(n) : lahnet::lah_network(n);
    if (format == "json") {
        print_json(lahnet::network_to_json(net));
    } else if (format == "dot" || format == "text") {
        std::cout << lahnet::to_dot(net);
    } else {
        std::cerr << "network supports formats dot, json\n";
        return kExitUsage;
    }
    return kExitVerified;
}

// --mutate-edge r,c,w: reweight the diagonal edge u_{r,c} -> u_{r-1,c}.
lahnet::Network apply_mutation(const lahnet::Network& net, const std::string& mutation) {
    std::vector<std::string> parts;
    std::string token;
    for (char c : mutation) {
        if (c == ',') {
            parts.push_back(token);
            token.clear();
        } else {
            token += c;
        }
    }
    parts.push_back(token);
    if (parts.size() != 3) {
        throw lahnet::IndexError("--mutate-edge expects r,c,w, got '" + mutation + "'");
    }
    const std::size_t r = std::stoul(parts[0]);
    const std::size_t c = std::stoul(parts[1]);
    const BigInt w = lahnet::parse_decimal(parts[2]);
    if (r < 2 || r > net.n() || c < 1 || c >= r) {
        throw lahnet::IndexError("--mutate-edge: no diagonal edge leaves u[" + parts[0] + "," +
                                 parts[1] + "] in a network of order " + std::to_string(net.n()));
    }
    auto grid_label = [&](std::size_t row, std::size_t col) {
        return col == row ? "b" + std::to_string(row)
                          : "u[" + std::to_string(row) + "," + std::to_string(col) + "]";
    };
    return lahnet::with_edge_weight(net, grid_label(r, c), grid_label(r - 1, c), w);
}

int cmd_verify_theorem(std::size_t n, const std::string& mutation, const std::string& format) {
    lahnet::Network net = lahnet::lah_network(n);
    if (!mutation.empty()) net = apply_mutation(net, mutation);
    const TheoremOutcome outcome = compare_weight_matrix(net, lahnet::lah_matrix(n).matrix());

    if (format == "json") {
        json doc;
        doc["n"] = outcome.n;
        if (!mutation.empty()) doc["mutated_edge"] = mutation;
        doc["holds"] = outcome.holds;
        if (outcome.holds) {
            doc["first_difference"] = nullptr;
        } else {
            json diff;
            diff["i"] = outcome.diff_i;
            diff["j"] = outcome.diff_j;
            diff["weight_matrix"] = lahnet::to_decimal(outcome.from_network);
            diff["lah_matrix"] = lahnet::to_decimal(outcome.from_table);
            doc["first_difference"] = std::move(diff);
        }
        print_json(doc);
    } else if (format == "text") {
        if (outcome.holds) {
            std::cout << "weight matrix of the order-" << n
                      << " network matches the Lah matrix entrywise\n";
        } else {
            std::cout << "MISMATCH at (" << outcome.diff_i << "," << outcome.diff_j
                      << "): network gives " << outcome.from_network << ", table gives "
                      << outcome.from_table << "\n";
        }
    } else {
        std::cerr << "verify-theorem supports formats text, json\n";
        return kExitUsage;
    }
    return outcome.holds ? kExitVerified : kExitFalsified;
}

int cmd_lgv(std::size_t n, const std::string& rows, const std::string& cols, bool unit,
            std::size_t guard, bool force, const std::string& format) {
    if (effective_force(force)) guard = static_cast<std::size_t>(-1);
    const lahnet::Network net = unit ? lahnet::unit_network(n) : lahnet::lah_network(n);
    const IndexSet I = parse_index_set(rows, "--rows");
    const IndexSet J = parse_index_set(cols, "--cols");
    const lahnet::LindstromReport report = lahnet::verify_lindstrom(net, I, J, guard);

    if (format == "json") {
        print_json(lahnet::lindstrom_report_to_json(report));
    } else if (format == "text") {
        std::cout << "I = " << report.I.to_string() << ", J = " << report.J.to_string() << "\n"
                  << "minor       = " << report.minor << "\n"
                  << "family_sum  = " << report.family_sum << "\n"
                  << "family_count= " << report.family_count << "\n"
                  << "equal       = " << (report.equal ? "true" : "false") << "\n";
    } else {
        std::cerr << "lgv supports formats text, json\n";
        return kExitUsage;
    }
    return report.equal ? kExitVerified : kExitFalsified;
}

int cmd_lgv_exhaustive(std::size_t n, std::size_t max_size, bool unit, std::size_t guard,
                       bool force, const std::string& format) {
    if (effective_force(force)) guard = static_cast<std::size_t>(-1);
    const lahnet::Network net = unit ? lahnet::unit_network(n) : lahnet::lah_network(n);
    if (max_size == 0 || max_size > n) max_size = n;

    std::size_t pairs = 0;
    std::vector<lahnet::LindstromReport> failures;
    for (std::size_t p = 1; p <= max_size; ++p) {
        for (const IndexSet& I : lahnet::index_subsets(n, p)) {
            for (const IndexSet& J : lahnet::index_subsets(n, p)) {
                lahnet::LindstromReport report = lahnet::verify_lindstrom(net, I, J, guard);
                ++pairs;
                if (!report.equal) failures.push_back(std::move(report));
            }
        }
    }

    if (format == "json") {
        json doc;
        doc["n"] = n;
        doc["network"] = unit ? "unit" : "lah";
        doc["max_size"] = max_size;
        doc["pairs_checked"] = pairs;
        doc["all_equal"] = failures.empty();
        json failed = json::array();
        for (const auto& report : failures)
            failed.push_back(lahnet::lindstrom_report_to_json(report));
        doc["failures"] = std::move(failed);
        print_json(doc);
    } else if (format == "text") {
        std::cout << "checked " << pairs << " index-set pairs on the " << (unit ? "unit" : "lah")
                  << " network of order " << n << " (sizes 1.." << max_size << ")\n";
        if (failures.empty()) {
            std::cout << "minor == family_sum for every pair\n";
        } else {
            for (const auto& report : failures) {
                std::cout << "FAIL I=" << report.I.to_string() << " J=" << report.J.to_string()
                          << " minor=" << report.minor << " family_sum=" << report.family_sum
                          << "\n";
            }
        }
    } else {
        std::cerr << "lgv-exhaustive supports formats text, json\n";
        return kExitUsage;
    }
    return failures.empty() ? kExitVerified : kExitFalsified;
}

ExactMatrix select_matrix(std::size_t m, const std::string& matrix_text) {
    if (!matrix_text.empty()) return lahnet::matrix_from_text(matrix_text);
    if (m == 0) throw lahnet::DimensionError("pass --m or --matrix");
    return lahnet::lah_matrix(m).matrix();
}

int cmd_tnn(std::size_t m, const std::string& matrix_text, bool force,
            const std::string& format) {
    const ExactMatrix M = select_matrix(m, matrix_text);
    const lahnet::TnnReport report = lahnet::is_totally_nonnegative(M, effective_force(force));

    if (format == "json") {
        print_json(lahnet::tnn_report_to_json(report));
    } else if (format == "text") {
        std::cout << report.rows << "x" << report.cols << " matrix, checked "
                  << report.checked_minor_count << " minors\n";
        if (report.is_tnn) {
            std::cout << "totally non-negative: yes\n";
        } else {
            std::cout << "totally non-negative: NO; minor (" << report.witness->rows.to_string()
                      << ", " << report.witness->cols.to_string() << ") = "
                      << report.witness->value << "\n";
        }
    } else {
        std::cerr << "tnn supports formats text, json\n";
        return kExitUsage;
    }
    return report.is_tnn ? kExitVerified : kExitFalsified;
}

int cmd_varcheck(std::size_t m, const std::string& matrix_text, std::size_t samples,
                 std::uint64_t seed, std::int64_t entry_bound, const std::string& format) {
    const ExactMatrix M = select_matrix(m, matrix_text);
    const lahnet::VariationReport report =
        lahnet::check_variation_decreasing(M, samples, seed, entry_bound);

    if (format == "json") {
        print_json(lahnet::variation_report_to_json(report));
    } else if (format == "text") {
        std::cout << "samples = " << report.sample_count << ", seed = " << report.seed
                  << ", entries in [-" << report.entry_bound << "," << report.entry_bound
                  << "], generator = " << report.generator << "\n"
                  << "violations = " << report.violations.size()
                  << ", max variation drop = " << report.max_drop << "\n";
        for (const auto& violation : report.violations) {
            std::cout << "  x = (";
            for (std::size_t i = 0; i < violation.input.size(); ++i) {
                if (i) std::cout << ",";
                std::cout << violation.input[i];
            }
            std::cout << ") raises variation " << violation.input_variation << " -> "
                      << violation.output_variation << "\n";
        }
    } else {
        std::cerr << "varcheck supports formats text, json\n";
        return kExitUsage;
    }
    return report.violations.empty() ? kExitVerified : kExitFalsified;
}

int cmd_identity(std::size_t n, const std::string& format) {
    std::vector<lahnet::IdentityReport> failures;
    for (std::size_t i = 0; i <= n; ++i) {
        lahnet::IdentityReport report = lahnet::verify_polynomial_identity(i);
        if (!report.holds) failures.push_back(std::move(report));
    }

    if (format == "json") {
        json doc;
        doc["max_n"] = n;
        doc["all_hold"] = failures.empty();
        json failed = json::array();
        for (const auto& report : failures)
            failed.push_back(lahnet::identity_report_to_json(report));
        doc["failures"] = std::move(failed);
        print_json(doc);
    } else if (format == "text") {
        if (failures.empty()) {
            std::cout << "rising factorial expands over falling factorials for every n <= " << n
                      << "\n";
        } else {
            for (const auto& report : failures) {
                std::cout << "FAIL n=" << report.n << " at degree " << report.mismatch->degree
                          << ": " << report.mismatch->lhs << " != " << report.mismatch->rhs
                          << "\n";
            }
        }
    } else {
        std::cerr << "identity supports formats text, json\n";
        return kExitUsage;
    }
    return failures.empty() ? kExitVerified : kExitFalsified;
}

int cmd_enumerate(std::size_t n, std::int64_t k_opt, bool force, const std::string& format) {
    const bool lifted = effective_force(force);
    const lahnet::LahTable table = lahnet::lah_recurrence_table(n);

    struct Row {
        std::size_t k;
        BigInt enumeration, closed_form, recurrence;
        bool agree;
    };
    std::vector<Row> results;
    bool all_agree = true;
    const std::size_t k_from = k_opt < 0 ? 0 : static_cast<std::size_t>(k_opt);
    const std::size_t k_to = k_opt < 0 ? n : static_cast<std::size_t>(k_opt);
    for (std::size_t k = k_from; k <= k_to; ++k) {
        Row row;
        row.k = k;
        row.enumeration = lahnet::lah_enumerate(n, k, lifted);
        row.closed_form = lahnet::lah_closed_form(n, k);
        row.recurrence = table.at(n, k);
        row.agree = row.enumeration == row.closed_form && row.closed_form == row.recurrence;
        all_agree = all_agree && row.agree;
        results.push_back(std::move(row));
    }

    if (format == "json") {
        json doc;
        doc["n"] = n;
        doc["all_agree"] = all_agree;
        json rows = json::array();
        for (const Row& row : results) {
            json item;
            item["k"] = row.k;
            item["enumeration"] = lahnet::to_decimal(row.enumeration);
            item["closed_form"] = lahnet::to_decimal(row.closed_form);
            item["recurrence"] = lahnet::to_decimal(row.recurrence);
            item["agree"] = row.agree;
            rows.push_back(std::move(item));
        }
        doc["results"] = std::move(rows);
        print_json(doc);
    } else if (format == "text") {
        for (const Row& row : results) {
            std::cout << "k=" << row.k << ": enumeration=" << row.enumeration
                      << " closed_form=" << row.closed_form << " recurrence=" << row.recurrence
                      << (row.agree ? "" : "  MISMATCH") << "\n";
        }
        std::cout << (all_agree ? "all three routes agree" : "routes DISAGREE") << "\n";
    } else {
        std::cerr << "enumerate supports formats text, json\n";
        return kExitUsage;
    }
    return all_agree ? kExitVerified : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lah numbers as weighted path counts: exact verification toolkit"};
    app.require_subcommand(1);

    const CLI::Validator kPositive =
        CLI::Validator(
            [](std::string& input) -> std::string {
                for (char c : input)
                    if (c < '0' || c > '9') return "'" + input + "' is not a positive integer";
                return input.empty() || input == std::string(input.size(), '0')
                           ? "'" + input + "' is not a positive integer"
                           : "";
            },
            "POSITIVE");

    std::size_t n = 1, m = 0, samples = 1000, max_size = 0;
    std::size_t guard = lahnet::kFamilyEnumerationGuard;
    std::uint64_t seed = 42;
    std::int64_t entry_bound = 9, k_opt = -1;
    std::string format = "text", rows, cols, matrix_text, mutation;
    bool unit = false, force = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    };

    CLI::App* lah = app.add_subcommand("lah", "print the Lah matrix LM_n");
    lah->add_option("--n", n, "matrix order")->required()->check(kPositive);
    add_format(lah);

    CLI::App* network = app.add_subcommand("network", "serialize the order-n network");
    network->add_option("--n", n, "network order")->required()->check(kPositive);
    network->add_flag("--unit", unit, "unit weights instead of row weights");
    add_format(network);

    CLI::App* verify = app.add_subcommand(
        "verify-theorem", "compare the network weight matrix against the Lah matrix");
    verify->add_option("--n", n, "order")->required()->check(kPositive);
    verify->add_option("--mutate-edge", mutation,
                       "r,c,w: set the diagonal edge u[r,c] -> u[r-1,c] to weight w");
    add_format(verify);

    CLI::App* lgv = app.add_subcommand("lgv", "minor vs. disjoint-family sum for one (I, J)");
    lgv->add_option("--n", n, "network order")->required()->check(kPositive);
    lgv->add_option("--rows", rows, "source indices, e.g. 2,3")->required();
    lgv->add_option("--cols", cols, "sink indices, e.g. 1,2")->required();
    lgv->add_flag("--unit", unit, "unit-weight network");
    lgv->add_option("--guard", guard, "family-combination guard");
    lgv->add_flag("--force", force, "lift guards");
    add_format(lgv);

    CLI::App* lgv_ex = app.add_subcommand("lgv-exhaustive",
                                          "minor vs. family sum for every (I, J) up to a size");
    lgv_ex->add_option("--n", n, "network order")->required()->check(kPositive);
    lgv_ex->add_option("--max-size", max_size, "largest index-set size (default n)");
    lgv_ex->add_flag("--unit", unit, "unit-weight network");
    lgv_ex->add_option("--guard", guard, "family-combination guard");
    lgv_ex->add_flag("--force", force, "lift guards");
    add_format(lgv_ex);

    CLI::App* tnn = app.add_subcommand("tnn", "exhaustive total-nonnegativity check");
    tnn->add_option("--m", m, "Lah matrix order")->check(kPositive);
    tnn->add_option("--matrix", matrix_text, "explicit matrix, rows ';'-separated: \"0,1;1,0\"");
    tnn->add_flag("--force", force, "lift the dimension guard");
    add_format(tnn);

    CLI::App* varcheck = app.add_subcommand("varcheck", "sampled variation-decreasing check");
    varcheck->add_option("--m", m, "Lah matrix order")->check(kPositive);
    varcheck->add_option("--matrix", matrix_text, "explicit matrix as for tnn");
    varcheck->add_option("--samples", samples, "number of sampled vectors")
        ->check(kPositive);
    varcheck->add_option("--seed", seed, "generator seed");
    varcheck->add_option("--entry-bound", entry_bound, "entries drawn from [-B, B]")
        ->check(kPositive);
    add_format(varcheck);

    CLI::App* identity = app.add_subcommand(
        "identity", "expand the rising factorial over falling factorials for all orders <= n");
    identity->add_option("--n", n, "largest order checked")->required();
    add_format(identity);

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "compare enumeration, closed form, and recurrence");
    enumerate->add_option("--n", n, "number of elements")->required();
    enumerate->add_option("--k", k_opt, "single block count (default: all 0..n)");
    enumerate->add_flag("--force", force, "lift the enumeration cap");
    add_format(enumerate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (lah->parsed()) return cmd_lah(n, format);
        if (network->parsed()) return cmd_network(n, unit, format);
        if (verify->parsed()) return cmd_verify_theorem(n, mutation, format);
        if (lgv->parsed()) return cmd_lgv(n, rows, cols, unit, guard, force, format);
        if (lgv_ex->parsed())
            return cmd_lgv_exhaustive(n, max_size, unit, guard, force, format);
        if (tnn->parsed()) return cmd_tnn(m, matrix_text, force, format);
        if (varcheck->parsed())
            return cmd_varcheck(m, matrix_text, samples, seed, entry_bound, format);
        if (identity->parsed()) return cmd_identity(n, format);
        if (enumerate->parsed()) return cmd_enumerate(n, k_opt, force, format);
    } catch (const lahnet::GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const lahnet::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
