// Acceptance suite: one check per shipping criterion, one PASS/FAIL line
// each, exact arithmetic throughout. Criterion 8 is a scale benchmark and is
// reported without gating the exit code.
//
// usage: liftspace_acceptance <path-to-cli-binary>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "liftspace/liftspace.hpp"
#include "support/generators.hpp"
#include "support/table1_reference.hpp"

using namespace liftspace;
namespace ts = liftspace::testsupport;

namespace {

std::string g_cli_path;

std::string run_cli(const std::string& args) {
    const std::string command = g_cli_path + " " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
    if (!pipe) throw std::runtime_error("cannot run: " + command);
    std::string output;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe.get()))
        output.append(buffer, got);
    return output;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(line);
    while (std::getline(in, token, sep)) out.push_back(token);
    return out;
}

// Parse the CSV emitted by `table1`: header, then one row per function with
// truth table and 20 coordinates.
std::vector<RationalVector> parse_table_csv(const std::string& csv, std::string& error) {
    std::vector<RationalVector> vectors;
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || split(line, ',').size() != 22) {
        error = "missing or malformed CSV header";
        return {};
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 22) {
            error = "row with " + std::to_string(fields.size()) + " fields";
            return {};
        }
        std::vector<Rational> entries;
        for (std::size_t k = 2; k < fields.size(); ++k)
            entries.push_back(parse_rational(fields[k]));
        vectors.emplace_back(std::move(entries));
    }
    if (vectors.size() != 16) {
        error = "expected 16 rows, got " + std::to_string(vectors.size());
        return {};
    }
    return vectors;
}

struct Criterion {
    int number;
    bool blocking;
    std::function<std::string()> run;  // returns "" on pass, reason on fail
};

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: liftspace_acceptance <path-to-cli-binary>\n";
        return 2;
    }
    g_cli_path = argv[1];

    std::vector<RationalVector> cli_vectors;  // filled by criterion 1, reused by 2

    std::vector<Criterion> criteria;

    criteria.push_back({1, true, [&]() -> std::string {
        const std::string csv = run_cli("table1 --format csv");
        std::string error;
        cli_vectors = parse_table_csv(csv, error);
        if (cli_vectors.empty()) return error;
        std::size_t pinned = 0;
        for (std::size_t i = 0; i < 16; ++i) {
            for (std::size_t c = 0; c < 20; ++c) {
                const std::int64_t expected = ts::kLiftedTable[i][c];
                if (expected == ts::kUnpinned) continue;
                ++pinned;
                if (cli_vectors[i][c] != Rational(expected))
                    return "b_" + std::to_string(i + 1) + " coordinate " + std::to_string(c + 1) +
                           " is " + format_rational(cli_vectors[i][c]) + ", pinned value " +
                           std::to_string(expected);
            }
        }
        return pinned == 305 ? "" : "expected 305 pinned entries, checked " +
                                        std::to_string(pinned);
    }});

    criteria.push_back({2, true, [&]() -> std::string {
        if (cli_vectors.size() != 16) return "no table output to check";
        std::size_t pairs = 0;
        for (std::size_t i = 0; i < 16; ++i)
            for (std::size_t j = i + 1; j < 16; ++j) {
                ++pairs;
                const Rational ip = inner_product(cli_vectors[i], cli_vectors[j]);
                if (ip != 0)
                    return "<b_" + std::to_string(i + 1) + "|b_" + std::to_string(j + 1) +
                           "> = " + format_rational(ip);
            }
        return pairs == 120 ? "" : "checked " + std::to_string(pairs) + " pairs, expected 120";
    }});

    criteria.push_back({3, true, []() -> std::string {
        const FunctionFamily family = enumerate_functions(2);
        const LiftedBasis basis = lift_function_family(2);
        const PartitionPVM pvm = build_pvm(basis, partition_by(Predicate::parity(), family));
        for (std::size_t i = 1; i <= 16; ++i) {
            const QueryOutcome outcome = single_query(pvm, basis.at_index(i));
            const bool odd = ts::kParityOdd.count(i) > 0;
            if (!outcome.deterministic || outcome.probability != 1)
                return "f_" + std::to_string(i) + " not deterministic";
            if (outcome.label != (odd ? "odd" : "even"))
                return "f_" + std::to_string(i) + " classified " + outcome.label;
            std::size_t ones = 0;
            for (auto bit : family.at_index(i).truth_table()) ones += bit;
            if ((ones % 2 == 1) != odd)
                return "classical parity disagrees for f_" + std::to_string(i);
        }
        return "";
    }});

    criteria.push_back({4, true, []() -> std::string {
        const FunctionFamily family = enumerate_functions(2);
        const LiftedBasis basis = lift_function_family(2);
        const RationalMatrix e1 = build_projector(basis, ts::kParityOdd);
        const RationalMatrix e0 = build_projector(basis, ts::kParityEven);
        std::set<std::size_t> all;
        for (std::size_t i = 1; i <= 16; ++i) all.insert(i);
        const RationalMatrix span = build_projector(basis, all);
        if (e1 * e1 != e1) return "E_1 not idempotent";
        if (e0 * e0 != e0) return "E_0 not idempotent";
        if (!(e0 * e1).is_zero()) return "E_0 E_1 != 0";
        if (e0 + e1 != span) return "E_0 + E_1 != span projector";
        if (rank(span) != 16) return "span projector rank " + std::to_string(rank(span));
        if (rank(e1) != 8) return "rank(E_1) = " + std::to_string(rank(e1));
        if (rank(e0) != 8) return "rank(E_0) = " + std::to_string(rank(e0));
        return "";
    }});

    criteria.push_back({5, true, []() -> std::string {
        const FunctionFamily family = enumerate_functions(1);
        const LiftedBasis basis = lift_function_family(1);
        if (basis.dim() != 6) return "lifted dimension " + std::to_string(basis.dim());
        const Partition partition = partition_by(Predicate::constant(), family);
        const PartitionPVM pvm = build_pvm(basis, partition);
        for (std::size_t i = 1; i <= 4; ++i) {
            const QueryOutcome outcome = single_query(pvm, basis.at_index(i));
            if (!outcome.deterministic || outcome.probability != 1)
                return "f_" + std::to_string(i) + " not deterministic";
            const bool constant = family.at_index(i).is_constant();
            if (outcome.label != (constant ? "1" : "0"))
                return "f_" + std::to_string(i) + " classified " + outcome.label;
        }
        return "";
    }});

    criteria.push_back({6, true, []() -> std::string {
        std::mt19937 rng(20260810);
        const FunctionFamily family = enumerate_functions(2);
        const LiftedBasis basis = lift_function_family(2);
        std::size_t checks = 0;
        for (int trial = 0; trial < 25; ++trial) {
            const Predicate predicate = ts::random_predicate(rng, 2);
            const Partition partition = partition_by(predicate, family);
            const PartitionPVM pvm = build_pvm(basis, partition);
            for (std::size_t i = 1; i <= 16; ++i) {
                ++checks;
                const QueryOutcome outcome = single_query(pvm, basis.at_index(i));
                if (!outcome.deterministic || outcome.probability != 1 ||
                    outcome.label != partition.label_of(i))
                    return "predicate '" + predicate.to_string() + "' fails on f_" +
                           std::to_string(i);
            }
        }
        return checks == 400 ? "" : "ran " + std::to_string(checks) + " checks, expected 400";
    }});

    criteria.push_back({7, true, []() -> std::string {
        const BipartiteShape shape(2, 2);
        if (schmidt_rank(RationalVector{1, 0, 0, 1}, shape) != 2)
            return "schmidt_rank((1,0,0,1)) != 2";
        const RationalVector prod{2, 4, 3, 6};
        const auto factors = product_factors(prod, shape);
        if (!factors) return "(2,4,3,6) not recognized as a product";
        if (tensor_product(factors->first, factors->second) != prod)
            return "recovered factors do not reproduce (2,4,3,6)";
        const DensityMatrix rho = partial_trace(RationalVector{1, 0, 0, 1}, shape, Side::A);
        if (trace(rho.matrix) != 1) return "partial trace has trace != 1";
        if (purity(rho) != Rational(1, 2))
            return "purity is " + format_ratio(purity(rho)) + ", expected 1/2";
        std::mt19937 rng(7070);
        for (int trial = 0; trial < 100; ++trial) {
            const RationalVector v = ts::random_nonzero_vector(rng, 2);
            const RationalVector w = ts::random_nonzero_vector(rng, 2);
            const RationalVector state = tensor_product(v, w);
            if (purity(partial_trace(state, shape, Side::A)) != 1)
                return "random product state with reduced purity != 1";
        }
        return "";
    }});

    criteria.push_back({8, false, []() -> std::string {
        // n=3 scale probe under a 8-Mbit per-entry budget. Coupling sizes
        // double per vector from vector 18 on, so the full 256-vector lifting
        // would need integers of ~10^74 digits; the probe records how far a
        // bounded run gets and how fast entries grow.
        const std::size_t budget_bits = std::size_t{1} << 23;
        const auto start = std::chrono::steady_clock::now();
        try {
            const LiftedBasis basis = lift_function_family(3, 3, LiftOptions{budget_bits});
            const auto elapsed = std::chrono::duration<double>(
                std::chrono::steady_clock::now() - start).count();
            const OrthogonalityReport report = verify_orthogonality(basis);
            std::size_t max_digits = 0;
            for (const auto& v : basis.vectors)
                for (const auto& e : v)
                    if (entry_digits(e) > max_digits) max_digits = entry_digits(e);
            if (!report.ok()) return "orthogonality failed";
            std::ostringstream note;
            note << "completed in " << elapsed << "s, max entry " << max_digits << " digits";
            return "UNEXPECTED-PASS " + note.str();
        } catch (const LiftBudgetExceeded& e) {
            const auto elapsed = std::chrono::duration<double>(
                std::chrono::steady_clock::now() - start).count();
            std::ostringstream note;
            note << "lifted " << e.vectors_completed() << "/256 vectors in " << elapsed
                 << "s before an entry passed " << (budget_bits >> 20)
                 << " Mbits (~" << (e.max_bits_seen() * 301 / 1000)
                 << " decimal digits); entry sizes double per vector from vector 18, so the "
                    "full 264-dim lifting needs ~10^74-digit integers and cannot complete";
            return note.str();
        }
    }});

    bool all_blocking_passed = true;
    for (const auto& criterion : criteria) {
        std::string reason;
        try {
            reason = criterion.run();
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        const bool passed = reason.empty();
        if (criterion.number == 8 && !passed && reason.rfind("UNEXPECTED-PASS", 0) == 0) {
            std::cout << "criterion 8: PASS (benchmark) — " << reason.substr(16) << "\n";
            continue;
        }
        if (passed) {
            std::cout << "criterion " << criterion.number << ": PASS\n";
        } else if (!criterion.blocking) {
            std::cout << "criterion " << criterion.number << ": FAIL (non-blocking benchmark) — "
                      << reason << "\n";
        } else {
            std::cout << "criterion " << criterion.number << ": FAIL — " << reason << "\n";
            all_blocking_passed = false;
        }
    }
    return all_blocking_passed ? 0 : 1;
}
