#include "chev/ring.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace chev {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
    return r;
}
std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
    return r;
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// returns g = gcd(a,b) and x,y with a x + b y = g
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

}  // namespace

Ring Ring::zmod(std::int64_t n) {
    if (n < 2) throw InvalidInput("Z/n needs n >= 2 (trivial ring rejected)");
    if (n > (std::int64_t{1} << 31)) throw InvalidInput("modulus too large");
    return Ring(RingKind::ZMod, n);
}
Ring Ring::prime_field(std::int64_t p) {
    if (!is_prime(p)) throw InvalidInput("field_p needs a prime, got " + std::to_string(p));
    if (p > (std::int64_t{1} << 31)) throw InvalidInput("modulus too large");
    return Ring(RingKind::PrimeField, p);
}
Ring Ring::integers() { return Ring(RingKind::Integers, 0); }
Ring Ring::rationals() { return Ring(RingKind::Rationals, 0); }
Ring Ring::boolean(int k) {
    if (k < 1 || k > 62) throw InvalidInput("boolean ring F_2^k needs 1 <= k <= 62");
    return Ring(RingKind::Boolean, k);
}

Ring Ring::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind")) throw InvalidInput("ring descriptor must be an object with \"kind\"");
    const std::string k = j.at("kind").get<std::string>();
    auto n = [&]() -> std::int64_t {
        if (!j.contains("n") || !j.at("n").is_number_integer()) throw InvalidInput("ring kind " + k + " needs integer \"n\"");
        return j.at("n").get<std::int64_t>();
    };
    if (k == "zmod") return zmod(n());
    if (k == "field_p") return prime_field(n());
    if (k == "int") return integers();
    if (k == "rat") return rationals();
    if (k == "bool") return boolean(static_cast<int>(n()));
    throw InvalidInput("unknown ring kind: " + k);
}

Ring Ring::parse(const std::string& text) {
    if (!text.empty() && text.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw InvalidInput(std::string("bad ring JSON: ") + e.what());
        }
        return from_json(j);
    }
    // short names, as printed by name(): Z, Q, Z/9, F_5 (or F5), F_2^3
    auto number = [&](const std::string& digits) -> std::int64_t {
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidInput("bad ring descriptor '" + text + "'");
        try {
            return std::stoll(digits);
        } catch (const std::exception&) {
            throw InvalidInput("ring modulus out of range in '" + text + "'");
        }
    };
    if (text == "Z") return integers();
    if (text == "Q") return rationals();
    if (text.rfind("Z/", 0) == 0) return zmod(number(text.substr(2)));
    if (text.size() >= 2 && text[0] == 'F' && (text[1] == '_' || std::isdigit(static_cast<unsigned char>(text[1])))) {
        std::string rest = text.substr(text[1] == '_' ? 2 : 1);
        const auto caret = rest.find('^');
        if (caret != std::string::npos) {
            if (rest.substr(0, caret) != "2") throw InvalidInput("only F_2^k products are supported, got '" + text + "'");
            return boolean(static_cast<int>(number(rest.substr(caret + 1))));
        }
        const std::int64_t p = number(rest);
        return p == 2 ? boolean(1) : prime_field(p);
    }
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon);
    nlohmann::json j{{"kind", kind}};
    if (colon != std::string::npos) {
        try {
            j["n"] = std::stoll(text.substr(colon + 1));
        } catch (const std::exception&) {
            throw InvalidInput("bad ring modulus in '" + text + "'");
        }
    }
    return from_json(j);
}

std::int64_t Ring::size() const {
    switch (kind_) {
        case RingKind::ZMod:
        case RingKind::PrimeField:
            return n_;
        case RingKind::Boolean:
            return std::int64_t{1} << n_;
        default:
            throw std::logic_error("infinite ring has no size");
    }
}

nlohmann::json Ring::to_json() const {
    switch (kind_) {
        case RingKind::ZMod:
            return {{"kind", "zmod"}, {"n", n_}};
        case RingKind::PrimeField:
            return {{"kind", "field_p"}, {"n", n_}};
        case RingKind::Integers:
            return {{"kind", "int"}};
        case RingKind::Rationals:
            return {{"kind", "rat"}};
        case RingKind::Boolean:
            return {{"kind", "bool"}, {"n", n_}};
    }
    return {};
}

std::string Ring::name() const {
    switch (kind_) {
        case RingKind::ZMod:
            return "Z/" + std::to_string(n_);
        case RingKind::PrimeField:
            return "F_" + std::to_string(n_);
        case RingKind::Integers:
            return "Z";
        case RingKind::Rationals:
            return "Q";
        case RingKind::Boolean:
            return n_ == 1 ? "F_2" : "F_2^" + std::to_string(n_);
    }
    return "?";
}

Elem Ring::one() const { return kind_ == RingKind::Boolean ? Elem{mask(), 1} : Elem{1, 1}; }

Elem Ring::normalize(std::int64_t num, std::int64_t den) const {
    switch (kind_) {
        case RingKind::ZMod:
        case RingKind::PrimeField:
            return Elem{mod(num, n_), 1};
        case RingKind::Integers:
            return Elem{num, 1};
        case RingKind::Rationals: {
            if (den == 0) throw std::domain_error("zero denominator");
            if (den < 0) {
                num = -num;
                den = -den;
            }
            std::int64_t g = std::gcd(num, den);
            if (g > 1) {
                num /= g;
                den /= g;
            }
            return Elem{num, den};
        }
        case RingKind::Boolean:
            return Elem{num & mask(), 1};
    }
    return {};
}

Elem Ring::from_int(std::int64_t x) const {
    if (kind_ == RingKind::Boolean) return (x & 1) ? one() : zero();
    return normalize(x, 1);
}

Elem Ring::element(std::int64_t i) const {
    if (kind_ == RingKind::Boolean) return Elem{i & mask(), 1};
    return from_int(i);
}

Elem Ring::add(Elem a, Elem b) const {
    switch (kind_) {
        case RingKind::ZMod:
        case RingKind::PrimeField: {
            std::int64_t s = a.v + b.v;
            return Elem{s >= n_ ? s - n_ : s, 1};
        }
        case RingKind::Integers:
            return Elem{checked_add(a.v, b.v), 1};
        case RingKind::Rationals:
            return normalize(checked_add(checked_mul(a.v, b.d), checked_mul(b.v, a.d)), checked_mul(a.d, b.d));
        case RingKind::Boolean:
            return Elem{a.v ^ b.v, 1};
    }
    return {};
}

Elem Ring::neg(Elem a) const {
    switch (kind_) {
        case RingKind::ZMod:
        case RingKind::PrimeField:
            return Elem{a.v == 0 ? 0 : n_ - a.v, 1};
        case RingKind::Integers:
            return Elem{checked_mul(a.v, -1), 1};
        case RingKind::Rationals:
            return Elem{checked_mul(a.v, -1), a.d};
        case RingKind::Boolean:
            return a;
    }
    return {};
}

Elem Ring::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Ring::mul(Elem a, Elem b) const {
    switch (kind_) {
        case RingKind::ZMod:
        case RingKind::PrimeField:
            return Elem{(a.v * b.v) % n_, 1};
        case RingKind::Integers:
            return Elem{checked_mul(a.v, b.v), 1};
        case RingKind::Rationals:
            return normalize(checked_mul(a.v, b.v), checked_mul(a.d, b.d));
        case RingKind::Boolean:
            return Elem{a.v & b.v, 1};
    }
    return {};
}

Elem Ring::pow(Elem a, std::int64_t k) const {
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    Elem r = one();
    while (k > 0) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

bool Ring::is_unit(Elem a) const {
    switch (kind_) {
        case RingKind::ZMod:
        case RingKind::PrimeField:
            return std::gcd(a.v, n_) == 1;
        case RingKind::Integers:
            return a.v == 1 || a.v == -1;
        case RingKind::Rationals:
            return a.v != 0;
        case RingKind::Boolean:
            return a.v == mask();
    }
    return false;
}

Elem Ring::inv(Elem a) const {
    if (!is_unit(a)) throw NotInvertible(str(a) + " is not a unit in " + name());
    switch (kind_) {
        case RingKind::ZMod:
        case RingKind::PrimeField: {
            std::int64_t x, y;
            ext_gcd(a.v, n_, x, y);
            return Elem{mod(x, n_), 1};
        }
        case RingKind::Integers:
        case RingKind::Boolean:
            return a;
        case RingKind::Rationals:
            return normalize(a.d, a.v);
    }
    return {};
}

std::optional<Elem> Ring::divide(Elem d, Elem c) const {
    switch (kind_) {
        case RingKind::ZMod:
        case RingKind::PrimeField: {
            std::int64_t g = std::gcd(c.v, n_);
            if (d.v % g != 0) return std::nullopt;
            std::int64_t m = n_ / g;
            std::int64_t x, y;
            ext_gcd(c.v / g, m, x, y);
            return Elem{mod((d.v / g % m) * mod(x, m), m), 1};
        }
        case RingKind::Integers:
            if (c.v == 0) return d.v == 0 ? std::optional<Elem>(zero()) : std::nullopt;
            if (d.v % c.v != 0) return std::nullopt;
            return Elem{d.v / c.v, 1};
        case RingKind::Rationals:
            if (c.v == 0) return d.v == 0 ? std::optional<Elem>(zero()) : std::nullopt;
            return mul(d, inv(c));
        case RingKind::Boolean:
            if (d.v & ~c.v) return std::nullopt;
            return d;
    }
    return std::nullopt;
}

std::optional<std::vector<Elem>> Ring::bezout(const std::vector<Elem>& a) const {
    std::vector<Elem> x(a.size(), zero());
    switch (kind_) {
        case RingKind::ZMod:
        case RingKind::PrimeField:
        case RingKind::Integers: {
            // fold extended gcd over the entries (and n for Z/n)
            std::int64_t g = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                std::int64_t s, t;
                std::int64_t ng = ext_gcd(g, a[i].v, s, t);
                for (std::size_t j = 0; j < i; ++j) x[j] = mul(x[j], from_int(s));
                x[i] = from_int(t);
                g = ng;
            }
            if (kind_ == RingKind::Integers) {
                if (g != 1) return std::nullopt;
                return x;
            }
            if (std::gcd(g, n_) != 1) return std::nullopt;
            // sum x_i a_i = g, a unit mod n
            Elem gi = inv(from_int(g));
            for (auto& e : x) e = mul(e, gi);
            return x;
        }
        case RingKind::Rationals:
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i].v != 0) {
                    x[i] = inv(a[i]);
                    return x;
                }
            return std::nullopt;
        case RingKind::Boolean: {
            std::int64_t seen = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                x[i] = Elem{a[i].v & ~seen & mask(), 1};
                seen |= a[i].v;
            }
            if ((seen & mask()) != mask()) return std::nullopt;
            return x;
        }
    }
    return std::nullopt;
}

Elem Ring::sr1_witness(Elem a, Elem b) const {
    if (!bezout({a, b})) throw NotUnimodular("(" + str(a) + ", " + str(b) + ") does not generate " + name());
    switch (kind_) {
        case RingKind::ZMod:
        case RingKind::PrimeField:
            for (std::int64_t c = 0; c < n_; ++c)
                if (is_unit(add(a, mul(b, Elem{c, 1})))) return Elem{c, 1};
            break;
        case RingKind::Integers:
            for (std::int64_t target : {1, -1}) {
                if (b.v == 0) {
                    if (a.v == target) return zero();
                    continue;
                }
                if ((target - a.v) % b.v == 0) return Elem{(target - a.v) / b.v, 1};
            }
            throw NoWitness("no integer c with " + str(a) + " + " + str(b) + "*c = +-1");
        case RingKind::Rationals:
            return a.v != 0 ? zero() : inv(b);
        case RingKind::Boolean:
            return Elem{~a.v & mask(), 1};
    }
    throw NoWitness("no stable-rank-1 witness for (" + str(a) + ", " + str(b) + ") in " + name());
}

std::vector<Elem> Ring::reduce_row(Elem a, const std::vector<Elem>& b) const {
    std::vector<Elem> c(b.size(), zero());
    if (is_unit(a)) return c;
    std::vector<Elem> row{a};
    row.insert(row.end(), b.begin(), b.end());
    auto x = bezout(row);
    if (!x) throw NotUnimodular("row does not generate " + name());
    // (a, sum x_i b_i) is unimodular; one witness for it reduces the whole row
    Elem s = zero();
    for (std::size_t i = 0; i < b.size(); ++i) s = add(s, mul((*x)[i + 1], b[i]));
    Elem w = sr1_witness(a, s);
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = mul(w, (*x)[i + 1]);
    return c;
}

std::string Ring::str(Elem a) const {
    if (kind_ == RingKind::Rationals && a.d != 1) return std::to_string(a.v) + "/" + std::to_string(a.d);
    return std::to_string(a.v);
}

nlohmann::json Ring::elem_to_json(Elem a) const {
    if (kind_ == RingKind::Rationals && a.d != 1) return str(a);
    return a.v;
}

Elem Ring::elem_from_json(const nlohmann::json& j) const {
    if (j.is_number_integer()) {
        std::int64_t v = j.get<std::int64_t>();
        if (kind_ == RingKind::Boolean) {
            if (v < 0 || (v & ~mask())) throw InvalidInput("boolean ring element out of range");
            return Elem{v, 1};
        }
        return normalize(v, 1);
    }
    if (j.is_string() && kind_ == RingKind::Rationals) {
        std::string s = j.get<std::string>();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return normalize(std::stoll(s), 1);
            return normalize(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw InvalidInput("bad rational '" + s + "'");
        }
    }
    throw InvalidInput("bad ring element for " + name() + ": " + j.dump());
}

}  // namespace chev
