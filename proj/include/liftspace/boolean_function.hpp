#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "liftspace/errors.hpp"
#include "liftspace/rational.hpp"
#include "liftspace/vector.hpp"

namespace liftspace {

// Families are capped because they have 2^(2^n) members. The default cap can
// be raised per call (CLI: --max-arity / LIFTSPACE_MAX_ARITY), but never past
// kHardMaxArity: n=5 would already mean 2^32 truth tables.
inline constexpr unsigned kDefaultMaxArity = 3;
inline constexpr unsigned kHardMaxArity = 4;

// Truth table of a binary function of n bits. Inputs are ordered by their
// value as a big-endian binary number (00, 01, 10, 11 for n=2), so
// truth_table()[k] is the output on the k-th input.
class BooleanFunction {
public:
    BooleanFunction(unsigned arity, std::vector<std::uint8_t> truth_table)
        : arity_(arity), truth_table_(std::move(truth_table)) {
        if (arity_ < 1) throw std::invalid_argument("BooleanFunction: arity must be >= 1");
        if (truth_table_.size() != (std::size_t{1} << arity_))
            throw ArityMismatch("truth table has " + std::to_string(truth_table_.size()) +
                                " entries, expected " +
                                std::to_string(std::size_t{1} << arity_) + " for arity " +
                                std::to_string(arity_));
        for (auto bit : truth_table_)
            if (bit > 1)
                throw std::invalid_argument("BooleanFunction: truth table entries must be 0/1");
    }

    // Table-1 convention: the function with 1-based index i has truth table
    // equal to the binary expansion of i-1, most significant bit first.
    static BooleanFunction from_table_index(unsigned arity, std::size_t index) {
        const std::size_t inputs = std::size_t{1} << arity;
        const std::size_t count = std::size_t{1} << inputs;
        if (index < 1 || index > count)
            throw UnknownBasisIndex("function index f" + std::to_string(index) +
                                    " outside 1.." + std::to_string(count) + " for arity " +
                                    std::to_string(arity));
        std::vector<std::uint8_t> tt(inputs);
        const std::size_t value = index - 1;
        for (std::size_t k = 0; k < inputs; ++k)
            tt[k] = static_cast<std::uint8_t>((value >> (inputs - 1 - k)) & 1u);
        return BooleanFunction(arity, std::move(tt));
    }

    unsigned arity() const noexcept { return arity_; }
    std::size_t num_inputs() const noexcept { return truth_table_.size(); }
    const std::vector<std::uint8_t>& truth_table() const noexcept { return truth_table_; }

    std::uint8_t value(std::size_t input_index) const { return truth_table_.at(input_index); }

    std::size_t ones_count() const {
        std::size_t n = 0;
        for (auto bit : truth_table_) n += bit;
        return n;
    }

    bool is_constant() const {
        for (auto bit : truth_table_)
            if (bit != truth_table_.front()) return false;
        return true;
    }

    bool is_balanced() const { return 2 * ones_count() == truth_table_.size(); }

    // Odd number of 1-outputs.
    bool parity_odd() const { return ones_count() % 2 == 1; }

    // 1-based Table-1 index of this truth table.
    std::size_t table_index() const {
        std::size_t value = 0;
        for (auto bit : truth_table_) value = (value << 1) | bit;
        return value + 1;
    }

    std::string truth_table_string() const {
        std::string s;
        s.reserve(truth_table_.size());
        for (auto bit : truth_table_) s.push_back(bit ? '1' : '0');
        return s;
    }

    friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

private:
    unsigned arity_;
    std::vector<std::uint8_t> truth_table_;
};

// All 2^(2^arity) functions in Table-1 order (index i at position i-1).
struct FunctionFamily {
    unsigned arity = 0;
    std::vector<BooleanFunction> functions;

    std::size_t size() const noexcept { return functions.size(); }
    const BooleanFunction& at_index(std::size_t index_1based) const {
        if (index_1based < 1 || index_1based > functions.size())
            throw UnknownBasisIndex("function index f" + std::to_string(index_1based) +
                                    " outside 1.." + std::to_string(functions.size()));
        return functions[index_1based - 1];
    }
};

inline FunctionFamily enumerate_functions(unsigned n, unsigned max_arity = kDefaultMaxArity) {
    if (n < 1) throw std::invalid_argument("enumerate_functions: arity must be >= 1");
    const unsigned cap = max_arity < kHardMaxArity ? max_arity : kHardMaxArity;
    if (n > cap) {
        const Int inputs = Int(1) << n;
        std::string count = "2^" + inputs.str();
        if (n <= 6) count += " = " + (Int(1) << static_cast<unsigned>(inputs)).str();
        throw FamilyTooLarge("arity " + std::to_string(n) + " needs " + count +
                             " functions; cap is " + std::to_string(cap) +
                             (max_arity > kHardMaxArity
                                  ? " (hard ceiling " + std::to_string(kHardMaxArity) + ")"
                                  : ""));
    }
    const std::size_t inputs = std::size_t{1} << n;
    const std::size_t count = std::size_t{1} << inputs;
    FunctionFamily family{n, {}};
    family.functions.reserve(count);
    for (std::size_t i = 1; i <= count; ++i)
        family.functions.push_back(BooleanFunction::from_table_index(n, i));
    return family;
}

// Truth-table outputs as vector coordinates: dimension 2^arity, k-th entry
// the output on the k-th input.
inline RationalVector to_evector(const BooleanFunction& f) {
    std::vector<Rational> entries(f.num_inputs());
    for (std::size_t k = 0; k < f.num_inputs(); ++k) entries[k] = int(f.value(k));
    return RationalVector(std::move(entries));
}

// CLI function selector: "f6" (Table-1 index) or "0101" (truth table bits).
inline BooleanFunction parse_function_selector(std::string_view text, unsigned arity) {
    if (text.empty()) throw ParseError("empty function selector");
    if (text[0] == 'f' || text[0] == 'F') {
        const std::string digits(text.substr(1));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("invalid function index '" + std::string(text) + "'");
        return BooleanFunction::from_table_index(arity, std::stoull(digits));
    }
    if (text.find_first_not_of("01") != std::string_view::npos)
        throw ParseError("function selector '" + std::string(text) +
                         "' is neither an index (f6) nor a bitstring (0101)");
    std::vector<std::uint8_t> tt;
    tt.reserve(text.size());
    for (char ch : text) tt.push_back(ch == '1' ? 1 : 0);
    return BooleanFunction(arity, std::move(tt));
}

}  // namespace liftspace
