#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pimshort {

// Any n < 2^64 has every prime exponent <= 63, so 64 is enough.
inline constexpr unsigned kDefaultAlphaMax = 64;

// A prime-independent multiplicative function f, given by its values on
// prime powers: f(p^alpha) = g(alpha). The table g(0..alpha_max) satisfies
//
//   g(0) = 1,  g(1) = ... = g(r-1) = 1,  g(alpha) >= 2 for alpha >= r.
//
// Instances are immutable once built and safe to share between threads.
class ExponentRule {
public:
    // Validates `values` and derives r. If `declared_r` is nonzero it must
    // match the derived threshold. Throws ValidationError naming the
    // offending alpha.
    ExponentRule(std::string name, std::vector<std::uint64_t> values,
                 unsigned declared_r = 0);

    const std::string& name() const noexcept { return name_; }
    unsigned r() const noexcept { return r_; }
    unsigned alpha_max() const noexcept {
        return static_cast<unsigned>(values_.size() - 1);
    }
    std::span<const std::uint64_t> values() const noexcept { return values_; }

    // g(alpha); throws RangeError past alpha_max.
    std::uint64_t g(unsigned alpha) const;

private:
    std::string name_;
    std::vector<std::uint64_t> values_;
    unsigned r_ = 0;
};

// Exponent sequences of the built-in families. Each throws RangeError when
// alpha > alpha_max or the value does not fit in 64 bits.

// Unrestricted partitions P(alpha), via Euler's pentagonal-number recurrence.
std::uint64_t partition_count(unsigned alpha,
                              unsigned alpha_max = kDefaultAlphaMax);

// Plane partitions P_2(alpha): coefficients of prod_j (1 - x^j)^(-j).
std::uint64_t plane_partition_count(unsigned alpha,
                                    unsigned alpha_max = kDefaultAlphaMax);

// Partitions into parts q*m^2, counted with the multiplicity of the pair
// (q, m): coefficients of prod_q prod_m (1 - x^(q m^2))^(-1).
std::uint64_t semisimple_count(unsigned alpha,
                               unsigned alpha_max = kDefaultAlphaMax);

// tau(alpha) and 2^omega(alpha), for alpha >= 1 (DomainError on 0).
std::uint64_t divisor_count_of_exponent(unsigned alpha,
                                        unsigned alpha_max = kDefaultAlphaMax);
std::uint64_t unitary_exponent_count(unsigned alpha,
                                     unsigned alpha_max = kDefaultAlphaMax);

// 1 + floor(alpha / r).
std::uint64_t power_divisor_exponent(unsigned alpha, unsigned r);

// Whole tables g(0..alpha_max) for each family.
std::vector<std::uint64_t> partition_table(unsigned alpha_max);
std::vector<std::uint64_t> plane_partition_table(unsigned alpha_max);
std::vector<std::uint64_t> semisimple_table(unsigned alpha_max);

// Looks up a built-in rule: abelian, plane, semisimple, expdiv,
// unitary-expdiv or powerdiv-r:<r>. Throws LookupError on an unknown name.
ExponentRule build_rule(std::string_view name,
                        unsigned alpha_max = kDefaultAlphaMax);

// Parses a JSON document {"name": ..., "r": ..., "values": [...]}.
ExponentRule load_custom_rule(std::string_view config);
ExponentRule load_custom_rule_file(const std::string& path);

// The five r = 2 families used throughout the verification suites.
std::vector<std::string> builtin_family_names();

} // namespace pimshort
