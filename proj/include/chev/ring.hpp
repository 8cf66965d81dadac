#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace chev {

// Error hierarchy shared by the whole library. The CLI maps these to exit codes.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RingCapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoWitness : RingCapabilityError {
    using RingCapabilityError::RingCapabilityError;
};
struct NotUnimodular : RingCapabilityError {
    using RingCapabilityError::RingCapabilityError;
};
struct NotStableRank1 : RingCapabilityError {
    using RingCapabilityError::RingCapabilityError;
};
struct NotInvertible : RingCapabilityError {
    using RingCapabilityError::RingCapabilityError;
};

enum class RingKind { ZMod, PrimeField, Integers, Rationals, Boolean };

// Carrier shared by every ring kind. `d` is only meaningful for rationals
// (always positive, reduced); the boolean ring F_2^k stores a k-bit mask in `v`.
struct Elem {
    std::int64_t v = 0;
    std::int64_t d = 1;
    friend bool operator==(const Elem&, const Elem&) = default;
};

class Ring {
public:
    static Ring zmod(std::int64_t n);
    static Ring prime_field(std::int64_t p);
    static Ring integers();
    static Ring rationals();
    static Ring boolean(int k);
    static Ring from_json(const nlohmann::json& j);
    // "zmod:9", "field_p:5", "int", "rat", "bool:3", or a JSON object.
    static Ring parse(const std::string& text);

    RingKind kind() const { return kind_; }
    std::int64_t modulus() const { return n_; }
    bool finite() const { return kind_ != RingKind::Integers && kind_ != RingKind::Rationals; }
    // Number of elements for finite rings.
    std::int64_t size() const;
    nlohmann::json to_json() const;
    std::string name() const;
    bool operator==(const Ring& o) const { return kind_ == o.kind_ && n_ == o.n_; }

    Elem zero() const { return Elem{0, 1}; }
    Elem one() const;
    Elem from_int(std::int64_t x) const;
    // i-th element of a finite ring, 0 <= i < size().
    Elem element(std::int64_t i) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem pow(Elem a, std::int64_t k) const;  // k may be negative for units
    Elem mul_int(Elem a, std::int64_t k) const { return mul(a, from_int(k)); }

    bool is_zero(Elem a) const { return a == zero(); }
    bool is_one(Elem a) const { return a == one(); }
    bool is_unit(Elem a) const;
    Elem inv(Elem a) const;  // throws NotInvertible
    // Some y with c*y == d, if one exists.
    std::optional<Elem> divide(Elem d, Elem c) const;
    // Coefficients x with sum x_i a_i == 1, or nullopt when the a_i do not generate R.
    std::optional<std::vector<Elem>> bezout(const std::vector<Elem>& a) const;

    // c with a + b*c a unit. Throws NotUnimodular / NoWitness.
    Elem sr1_witness(Elem a, Elem b) const;
    // Coefficients c_i with a + sum c_i b_i a unit, for a unimodular row (a, b_1..b_m).
    std::vector<Elem> reduce_row(Elem a, const std::vector<Elem>& b) const;

    std::string str(Elem a) const;
    nlohmann::json elem_to_json(Elem a) const;
    Elem elem_from_json(const nlohmann::json& j) const;

private:
    Ring(RingKind k, std::int64_t n) : kind_(k), n_(n) {}
    Elem normalize(std::int64_t num, std::int64_t den) const;
    std::int64_t mask() const { return n_ >= 63 ? -1 : ((std::int64_t{1} << n_) - 1); }

    RingKind kind_;
    std::int64_t n_;  // modulus, prime, or k for F_2^k; 0 for Z and Q
};

}  // namespace chev
