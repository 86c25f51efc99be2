// liftspace CLI: enumerate -> lift -> partition -> build PVM -> query, plus
// golden table emission, invariant verification, and bipartite analysis.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liftspace/liftspace.hpp"

namespace ls = liftspace;

namespace {

// Exit codes, one per error class (documented in the README).
constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitArity = 3;
constexpr int kExitFamilyTooLarge = 4;
constexpr int kExitDimension = 5;
constexpr int kExitOutsideSpan = 6;
constexpr int kExitNotAPvm = 7;
constexpr int kExitZero = 8;
constexpr int kExitVerifyFailed = 9;
constexpr int kExitUnknownIndex = 10;
constexpr int kExitLiftBudget = 11;

int run_catching(const std::function<int()>& body) {
    try {
        return body();
    } catch (const ls::PredicateParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ls::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ls::ArityMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArity;
    } catch (const ls::FamilyTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFamilyTooLarge;
    } catch (const ls::DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const ls::StateOutsideSpan& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOutsideSpan;
    } catch (const ls::NotAPVM& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotAPvm;
    } catch (const ls::ZeroVectorDyad& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitZero;
    } catch (const ls::ZeroState& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitZero;
    } catch (const ls::UnknownBasisIndex& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknownIndex;
    } catch (const ls::LiftBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLiftBudget;
    } catch (const ls::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}

// ---------------------------------------------------------------------------
// basis emission

void emit_basis_csv(std::ostream& os, const ls::FunctionFamily& family,
                    const ls::LiftedBasis& basis) {
    os << "function,truth_table";
    for (std::size_t c = 1; c <= basis.dim(); ++c) os << ",c" << c;
    os << "\n";
    for (std::size_t i = 0; i < basis.count(); ++i) {
        const auto& f = family.functions[i];
        os << "f" << f.table_index() << "," << f.truth_table_string();
        for (const auto& entry : basis.vectors[i]) os << "," << ls::format_rational(entry);
        os << "\n";
    }
}

void emit_basis_pretty(std::ostream& os, const ls::FunctionFamily& family,
                       const ls::LiftedBasis& basis) {
    os << basis.count() << " vectors of dimension " << basis.dim() << " (prefix "
       << basis.prefix_dim << ")\n";
    std::vector<std::size_t> width(basis.dim(), 1);
    for (const auto& v : basis.vectors)
        for (std::size_t c = 0; c < basis.dim(); ++c)
            width[c] = std::max(width[c], ls::format_rational(v[c]).size());
    for (std::size_t i = 0; i < basis.count(); ++i) {
        const auto& f = family.functions[i];
        os << "f" << std::left << std::setw(3) << f.table_index() << std::right << " ["
           << f.truth_table_string() << "]  b_" << std::left << std::setw(3) << (i + 1)
           << std::right << " = (";
        for (std::size_t c = 0; c < basis.dim(); ++c) {
            if (c) os << ", ";
            os << std::setw(static_cast<int>(width[c])) << ls::format_rational(basis.vectors[i][c]);
        }
        os << ")\n";
    }
}

void emit_basis(std::ostream& os, const std::string& format, const ls::FunctionFamily& family,
                const ls::LiftedBasis& basis, unsigned arity) {
    if (format == "json") {
        os << ls::to_json(ls::BasisDocument{arity, basis}).dump(2) << "\n";
    } else if (format == "csv") {
        emit_basis_csv(os, family, basis);
    } else {
        emit_basis_pretty(os, family, basis);
    }
}

// ---------------------------------------------------------------------------
// query

std::vector<std::string> sample_outcomes(const ls::QueryOutcome& outcome, std::size_t count,
                                         std::uint64_t seed) {
    // Inverse CDF over the exact distribution; u = r/2^64 compared exactly.
    std::mt19937_64 rng(seed);
    const ls::Int denom = ls::Int(1) << 64;
    std::vector<std::string> draws;
    draws.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const ls::Rational u(ls::Int(rng()), denom);
        ls::Rational cumulative = 0;
        std::string label = outcome.distribution.back().label;
        for (const auto& cls : outcome.distribution) {
            cumulative += cls.probability;
            if (u < cumulative) {
                label = cls.label;
                break;
            }
        }
        draws.push_back(label);
    }
    return draws;
}

struct QueryConfig {
    unsigned n = 2;
    std::string predicate_text;
    std::string function_selector;
    std::string format = "pretty";
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;
    unsigned max_arity = ls::kDefaultMaxArity;
};

int cmd_query(const QueryConfig& cfg) {
    const ls::FunctionFamily family = ls::enumerate_functions(cfg.n, cfg.max_arity);
    const ls::Predicate predicate = ls::parse_predicate(cfg.predicate_text);
    const ls::Partition partition = ls::partition_by(predicate, family);
    const ls::LiftedBasis basis = ls::lift_function_family(cfg.n, cfg.max_arity);
    const ls::PartitionPVM pvm = ls::build_pvm(basis, partition);

    const ls::BooleanFunction f = ls::parse_function_selector(cfg.function_selector, cfg.n);
    const std::size_t index = f.table_index();
    const ls::QueryOutcome outcome = ls::state_mismatch_query(index, pvm, basis);

    std::vector<std::string> draws;
    if (cfg.sample_count > 0) draws = sample_outcomes(outcome, cfg.sample_count, cfg.seed);

    if (cfg.format == "json") {
        ls::json j{{"label", outcome.label},
                   {"probability", ls::to_json(outcome.probability)},
                   {"deterministic", outcome.deterministic},
                   {"function", "f" + std::to_string(index)},
                   {"truth_table", f.truth_table_string()}};
        ls::json dist = ls::json::array();
        for (const auto& cls : outcome.distribution) {
            ls::json members = ls::json::array();
            for (auto m : partition.members.at(cls.label)) members.push_back("f" + std::to_string(m));
            dist.push_back({{"label", cls.label},
                            {"probability", ls::to_json(cls.probability)},
                            {"members", std::move(members)}});
        }
        j["distribution"] = std::move(dist);
        if (!draws.empty()) {
            j["samples"] = draws;
            j["seed"] = cfg.seed;
        }
        std::cout << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "label,probability,deterministic\n"
                  << outcome.label << "," << ls::format_ratio(outcome.probability) << ","
                  << (outcome.deterministic ? "1" : "0") << "\n";
        if (!draws.empty()) {
            std::cout << "samples";
            for (const auto& d : draws) std::cout << "," << d;
            std::cout << "\n";
        }
    } else {
        std::cout << outcome.label << ", p = " << ls::format_ratio(outcome.probability) << "\n";
        std::cout << "prepared: f" << index << " [" << f.truth_table_string() << "]\n";
        std::cout << "deterministic: " << (outcome.deterministic ? "yes" : "no") << "\n";
        std::cout << "classes:\n";
        for (const auto& cls : outcome.distribution) {
            std::cout << "  " << cls.label << "  p = " << ls::format_ratio(cls.probability)
                      << "  members:";
            for (auto m : partition.members.at(cls.label)) std::cout << " f" << m;
            std::cout << "\n";
        }
        if (!draws.empty()) {
            std::cout << "samples (seed " << cfg.seed << "):";
            for (const auto& d : draws) std::cout << " " << d;
            std::cout << "\n";
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyConfig {
    std::optional<unsigned> n;
    std::string predicate_text;
    std::string basis_file;
    std::string format = "json";
    unsigned max_arity = ls::kDefaultMaxArity;
};

int cmd_verify(const VerifyConfig& cfg) {
    ls::json report;
    bool ok = true;

    unsigned arity = 0;
    ls::LiftedBasis basis;
    if (!cfg.basis_file.empty()) {
        std::ifstream in(cfg.basis_file);
        if (!in) throw ls::ParseError("cannot open basis file '" + cfg.basis_file + "'");
        ls::json j;
        try {
            in >> j;
        } catch (const ls::json::exception& e) {
            throw ls::ParseError("basis file is not valid JSON: " + std::string(e.what()));
        }
        ls::BasisDocument doc = ls::basis_from_json(j);
        arity = doc.arity;
        basis = std::move(doc.basis);
        report["basis_file"] = cfg.basis_file;
    } else {
        if (!cfg.n) throw ls::ParseError("verify needs --n or --basis");
        arity = *cfg.n;
        basis = ls::lift_function_family(arity, cfg.max_arity);
    }
    report["arity"] = arity;
    report["dim"] = basis.dim();

    const ls::OrthogonalityReport orth = ls::verify_orthogonality(basis);
    ls::json violations = ls::json::array();
    for (const auto& v : orth.violations)
        violations.push_back(
            {{"i", v.i}, {"j", v.j}, {"inner_product", ls::to_json(v.inner)}});
    report["orthogonality"] = {{"ok", orth.ok()},
                               {"pairs_checked", orth.pairs_checked},
                               {"violations", std::move(violations)}};
    ok = ok && orth.ok();

    if (!cfg.predicate_text.empty()) {
        const ls::FunctionFamily family = ls::enumerate_functions(arity, cfg.max_arity);
        if (family.size() != basis.count()) {
            report["pvm"] = {{"ok", false},
                             {"error", "basis has " + std::to_string(basis.count()) +
                                           " vectors, family needs " +
                                           std::to_string(family.size())}};
            ok = false;
        } else {
            const ls::Predicate predicate = ls::parse_predicate(cfg.predicate_text);
            const ls::Partition partition = ls::partition_by(predicate, family);
            report["predicate"] = predicate.to_string();
            try {
                const ls::PartitionPVM pvm = ls::build_pvm(basis, partition);
                ls::json classes = ls::json::array();
                for (const auto& cls : pvm.classes) {
                    ls::json members = ls::json::array();
                    for (auto m : cls.members) members.push_back(m);
                    classes.push_back({{"label", cls.label},
                                       {"rank", ls::rank(cls.projector)},
                                       {"members", std::move(members)}});
                }
                report["pvm"] = {{"ok", true}, {"classes", std::move(classes)}};

                ls::json failures = ls::json::array();
                for (std::size_t i = 1; i <= basis.count(); ++i) {
                    try {
                        const ls::QueryOutcome outcome = ls::state_mismatch_query(i, pvm, basis);
                        const bool good = outcome.deterministic &&
                                          outcome.label == partition.label_of(i);
                        if (!good)
                            failures.push_back({{"function", "f" + std::to_string(i)},
                                                {"label", outcome.label},
                                                {"probability", ls::to_json(outcome.probability)}});
                    } catch (const ls::Error& e) {
                        failures.push_back(
                            {{"function", "f" + std::to_string(i)}, {"error", e.what()}});
                    }
                }
                report["determinism"] = {{"ok", failures.empty()},
                                         {"checked", basis.count()},
                                         {"failures", failures}};
                ok = ok && failures.empty();
            } catch (const ls::NotAPVM& e) {
                report["pvm"] = {{"ok", false}, {"error", e.what()}};
                ok = false;
            }
        }
    }

    report["ok"] = ok;
    if (cfg.format == "pretty") {
        std::cout << "orthogonality: " << (orth.ok() ? "ok" : "FAILED") << " ("
                  << orth.pairs_checked << " pairs)\n";
        for (const auto& v : orth.violations)
            std::cout << "  <b_" << v.i << "|b_" << v.j
                      << "> = " << ls::format_rational(v.inner) << "\n";
        if (report.contains("pvm")) {
            std::cout << "pvm: " << (report["pvm"]["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
            if (report.contains("determinism"))
                std::cout << "determinism: "
                          << (report["determinism"]["ok"].get<bool>() ? "ok" : "FAILED") << " ("
                          << report["determinism"]["checked"].get<std::size_t>()
                          << " functions)\n";
        }
        std::cout << "result: " << (ok ? "ok" : "FAILED") << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// decompose

ls::RationalVector parse_vector_literal(const std::string& text) {
    std::vector<ls::Rational> entries;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        const auto last = token.find_last_not_of(" \t");
        if (first == std::string::npos) throw ls::ParseError("empty entry in vector literal");
        entries.push_back(ls::parse_rational(token.substr(first, last - first + 1)));
    }
    if (entries.empty()) throw ls::ParseError("empty vector literal");
    return ls::RationalVector(std::move(entries));
}

ls::BipartiteShape parse_shape(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos)
        throw ls::ParseError("dims must look like 2x2, got '" + text + "'");
    try {
        const std::size_t a = std::stoull(text.substr(0, x));
        const std::size_t b = std::stoull(text.substr(x + 1));
        if (a < 1 || b < 1) throw ls::ParseError("dims must be >= 1: '" + text + "'");
        return ls::BipartiteShape(a, b);
    } catch (const std::logic_error&) {
        throw ls::ParseError("dims must look like 2x2, got '" + text + "'");
    }
}

int cmd_decompose(const std::string& dims, const std::string& vector_text,
                  const std::string& format) {
    const ls::BipartiteShape shape = parse_shape(dims);
    const ls::RationalVector state = parse_vector_literal(vector_text);
    const std::size_t srank = ls::schmidt_rank(state, shape);
    const auto factors = ls::product_factors(state, shape);
    const ls::DensityMatrix rho_a = ls::partial_trace(state, shape, ls::Side::A);
    const ls::DensityMatrix rho_b = ls::partial_trace(state, shape, ls::Side::B);
    const ls::Rational purity_a = ls::purity(rho_a);
    const ls::Rational purity_b = ls::purity(rho_b);

    if (format == "json") {
        ls::json j{{"dims", {{"a", shape.dim_a}, {"b", shape.dim_b}}},
                   {"state", ls::to_json(state)},
                   {"schmidt_rank", srank},
                   {"product", factors.has_value()},
                   {"reduced_a", ls::to_json(rho_a.matrix)},
                   {"reduced_b", ls::to_json(rho_b.matrix)},
                   {"purity_a", ls::to_json(purity_a)},
                   {"purity_b", ls::to_json(purity_b)}};
        if (factors) {
            j["factor_a"] = ls::to_json(factors->first);
            j["factor_b"] = ls::to_json(factors->second);
        }
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "key,value\n";
        std::cout << "schmidt_rank," << srank << "\n";
        std::cout << "product," << (factors ? "1" : "0") << "\n";
        std::cout << "purity_a," << ls::format_ratio(purity_a) << "\n";
        std::cout << "purity_b," << ls::format_ratio(purity_b) << "\n";
    } else {
        std::cout << "state: " << state << "  dims " << shape.dim_a << "x" << shape.dim_b << "\n";
        std::cout << "schmidt rank: " << srank << "\n";
        if (factors) {
            std::cout << "product: yes\n";
            std::cout << "  factor A: " << factors->first << "\n";
            std::cout << "  factor B: " << factors->second << "\n";
        } else {
            std::cout << "product: no (entangled across this cut)\n";
        }
        std::cout << "reduced A: " << rho_a.matrix << "  purity " << ls::format_ratio(purity_a)
                  << "\n";
        std::cout << "reduced B: " << rho_b.matrix << "  purity " << ls::format_ratio(purity_b)
                  << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "liftspace: encode Boolean function families as orthogonal vectors by dimensional "
        "lifting and answer relational queries in one simulated projective measurement"};
    app.require_subcommand(1);
    app.fallthrough();

    unsigned max_arity = ls::kDefaultMaxArity;
    app.add_option("--max-arity", max_arity,
                   "arity cap for function families (default 3, hard ceiling 4)")
        ->envname("LIFTSPACE_MAX_ARITY")
        ->check(CLI::Range(1u, ls::kHardMaxArity));

    const std::vector<std::string> formats{"csv", "json", "pretty"};

    auto* table1 = app.add_subcommand(
        "table1", "emit the n=2 lifted basis (16 vectors, 20 dims) for golden-file comparison");
    std::string table1_format = "csv";
    table1->add_option("--format", table1_format)->check(CLI::IsMember(formats));

    auto* lift = app.add_subcommand("lift", "lift the e-vectors of a function family");
    unsigned lift_n = 2;
    std::string lift_format = "csv";
    std::size_t lift_max_bits = 0;
    lift->add_option("--n", lift_n, "function arity")->required();
    lift->add_option("--format", lift_format)->check(CLI::IsMember(formats));
    lift->add_option("--max-entry-bits", lift_max_bits,
                     "abort when any entry exceeds this many bits (0 = unlimited)");

    auto* query = app.add_subcommand(
        "query", "classify a function with one simulated projective measurement");
    QueryConfig qcfg;
    query->add_option("--n", qcfg.n, "function arity")->required();
    query->add_option("--predicate", qcfg.predicate_text, "predicate text, e.g. \"parity\"")
        ->required();
    query->add_option("--function", qcfg.function_selector, "function selector: f6 or 0101")
        ->required();
    query->add_option("--format", qcfg.format)->check(CLI::IsMember(formats));
    auto* sample_opt =
        query->add_option("--sample", qcfg.sample_count, "print N sampled outcome draws");
    auto* seed_opt = query->add_option("--seed", qcfg.seed, "seed for --sample draws");
    sample_opt->needs(seed_opt);

    auto* verify = app.add_subcommand("verify", "check orthogonality, PVM identities, determinism");
    VerifyConfig vcfg;
    unsigned verify_n = 0;
    auto* verify_n_opt = verify->add_option("--n", verify_n, "function arity");
    verify->add_option("--predicate", vcfg.predicate_text, "predicate to build the PVM from");
    verify->add_option("--basis", vcfg.basis_file, "verify a stored basis JSON file instead");
    verify->add_option("--format", vcfg.format)->check(CLI::IsMember(formats));

    auto* decompose = app.add_subcommand(
        "decompose", "Schmidt rank, product factors, reduced states of a bipartite vector");
    std::string dims, vector_text;
    std::string decompose_format = "pretty";
    decompose->add_option("--dims", dims, "factor dimensions, e.g. 2x2")->required();
    decompose->add_option("--vector", vector_text, "state entries, e.g. \"1,0,0,1\"")->required();
    decompose->add_option("--format", decompose_format)->check(CLI::IsMember(formats));

    CLI11_PARSE(app, argc, argv);

    return run_catching([&]() -> int {
        if (table1->parsed()) {
            const ls::FunctionFamily family = ls::enumerate_functions(2);
            const ls::LiftedBasis basis = ls::lift_function_family(2);
            emit_basis(std::cout, table1_format, family, basis, 2);
            return kExitOk;
        }
        if (lift->parsed()) {
            const ls::FunctionFamily family = ls::enumerate_functions(lift_n, max_arity);
            const ls::LiftedBasis basis =
                ls::lift_function_family(lift_n, max_arity, ls::LiftOptions{lift_max_bits});
            emit_basis(std::cout, lift_format, family, basis, lift_n);
            return kExitOk;
        }
        if (query->parsed()) {
            qcfg.max_arity = max_arity;
            return cmd_query(qcfg);
        }
        if (verify->parsed()) {
            if (verify_n_opt->count() > 0) vcfg.n = verify_n;
            vcfg.max_arity = max_arity;
            return cmd_verify(vcfg);
        }
        if (decompose->parsed()) return cmd_decompose(dims, vector_text, decompose_format);
        return kExitInternal;
    });
}
