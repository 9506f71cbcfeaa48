#include "nfbertrand/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <gmpxx.h>
#include <json.hpp>

#include "nfbertrand/errors.hpp"

namespace nfb {

namespace {

using json = nlohmann::json;

std::int64_t isqrt64(std::int64_t n) {
    if (n < 0) return -1;
    auto r = std::int64_t(std::sqrt(double(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool squarefree(std::int64_t n) {
    n = std::llabs(n);
    for (std::int64_t q = 2; q * q <= n; ++q)
        if (n % (q * q) == 0) return false;
    return true;
}

int mod4(std::int64_t n) { return int(((n % 4) + 4) % 4); }

// log of a positive mpz, stable for values far beyond double range
double log_mpz(const mpz_class& x) {
    long e = 0;
    double d = mpz_get_d_2exp(&e, x.get_mpz_t());
    return std::log(d) + double(e) * M_LN2;
}

} // namespace

bool is_fundamental_discriminant(std::int64_t D) {
    if (D == 0 || D == 1) return false;
    if (mod4(D) == 1) return squarefree(D);
    if (D % 4 == 0) {
        std::int64_t m = D / 4;
        int r = mod4(m);
        if (r != 2 && r != 3) return false;
        if (m > 0 && isqrt64(m) * isqrt64(m) == m) return false;
        return squarefree(m);
    }
    return false;
}

void NumberField::validate() const {
    if (degree < 1) throw validation_error("invalid field '" + label + "': degree must be >= 1");
    if (discriminant == 0) throw validation_error("invalid field '" + label + "': discriminant must be nonzero");
    if (real_embeddings < 0 || complex_embeddings < 0)
        throw validation_error("invalid field '" + label + "': embedding counts must be nonnegative");
    if (real_embeddings + 2 * complex_embeddings != degree)
        throw validation_error("invalid field '" + label + "': signature violates r1 + 2 r2 = d");
    if ((discriminant == 1) != (degree == 1))
        throw validation_error("invalid field '" + label + "': discriminant 1 iff degree 1");
    if (class_number < 1) throw validation_error("invalid field '" + label + "': class number must be positive");
    if (!(regulator > 0)) throw validation_error("invalid field '" + label + "': regulator must be positive");
    if (roots_of_unity < 1) throw validation_error("invalid field '" + label + "': roots of unity must be positive");
    if (!polynomial.empty()) {
        if (int(polynomial.size()) != degree + 1 || polynomial.back() != 1)
            throw validation_error("invalid field '" + label + "': polynomial must be monic of degree d");
    }
    if (degree >= 2) {
        if (regulator / roots_of_unity < 0.09)
            throw validation_error("invalid field '" + label + "': Friedman bound R/w >= 9/100 violated");
        auto mink = minkowski_check(*this);
        if (!mink.ok)
            throw validation_error("invalid field '" + label + "': Minkowski discriminant inequality violated");
    }
}

double NumberField::residue() const {
    validate();
    return std::pow(2.0, real_embeddings) * std::pow(2.0 * M_PI, complex_embeddings) *
           double(class_number) * regulator / (double(roots_of_unity) * std::sqrt(abs_disc()));
}

MinkowskiCheck minkowski_check(const NumberField& field) {
    if (field.degree < 2)
        throw validation_error("minkowski_check: not asserted for degree-one fields");
    double d = field.degree;
    double lhs = d / field.abs_disc();
    double rhs = std::exp(d * std::log(4.0 / M_PI) + 2.0 * std::lgamma(d + 1.0) -
                          (2.0 * d - 1.0) * std::log(d));
    return {lhs <= rhs, lhs, rhs, lhs / rhs};
}

std::int64_t imaginary_class_number(std::int64_t D) {
    if (D >= 0 || !is_fundamental_discriminant(D))
        throw validation_error("imaginary_class_number: not a fundamental discriminant < 0");
    std::int64_t h = 0;
    for (std::int64_t a = 1; 3 * a * a <= -D; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if ((b * b - D) % (4 * a)) continue;
            std::int64_t c = (b * b - D) / (4 * a);
            if (c < a) continue;
            if (b < 0 && (a == -b || a == c)) continue;
            if (std::gcd(std::gcd(a, std::llabs(b)), c) != 1) continue;
            ++h;
        }
    }
    return h;
}

FundamentalUnit fundamental_unit(std::int64_t D) {
    if (D <= 0 || !is_fundamental_discriminant(D))
        throw validation_error("fundamental_unit: not a fundamental discriminant > 0");
    const std::int64_t s = isqrt64(D);

    // continued fraction of (P + sqrt D)/Q starting at P0 = D mod 2, Q0 = 2;
    // purely periodic from the second complete quotient on
    std::int64_t P = D & 1, Q = 2;
    auto step = [&]() -> std::int64_t {
        std::int64_t a = (P + s) / Q;
        P = a * Q - P;
        Q = (D - P * P) / Q;
        return a;
    };
    step();
    const std::int64_t P1 = P, Q1 = Q;

    // matrix product of [[a,1],[1,0]] over one full period of the cycle
    mpz_class m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    std::int64_t period = 0;
    const std::int64_t kMaxIterations = 10'000'000;
    do {
        std::int64_t ps = P, qs = Q;
        std::int64_t a = (ps + s) / qs;
        mpz_class n00 = m00 * a + m01;
        mpz_class n10 = m10 * a + m11;
        m01 = m00;
        m11 = m10;
        m00 = n00;
        m10 = n10;
        P = a * qs - ps;
        Q = (D - P * P) / qs;
        ++period;
        if (period > kMaxIterations)
            throw computation_error("fundamental_unit: period cap exceeded for D=" + std::to_string(D));
    } while (!(P == P1 && Q == Q1));

    // eps = m10 * (P1 + sqrt D)/Q1 + m11 = (a + b sqrt D)/2
    mpz_class num_a = 2 * (m10 * P1 + m11 * Q1);
    mpz_class num_b = 2 * m10;
    if (!mpz_divisible_ui_p(num_a.get_mpz_t(), static_cast<unsigned long>(Q1)) ||
        !mpz_divisible_ui_p(num_b.get_mpz_t(), static_cast<unsigned long>(Q1)))
        throw computation_error("fundamental_unit: nonintegral unit for D=" + std::to_string(D));
    mpz_class a = num_a / Q1;
    mpz_class b = num_b / Q1;

    int norm = (period % 2 == 0) ? 1 : -1;
    mpz_class check = a * a - D * b * b;
    if (check != 4 * norm)
        throw computation_error("fundamental_unit: unit equation failed for D=" + std::to_string(D));

    // log((a + b sqrt D)/2), stable when a, b are enormous
    double la = log_mpz(a);
    double lb = log_mpz(b) + 0.5 * std::log(double(D));
    double hi = std::max(la, lb), lo = std::min(la, lb);
    double reg = hi + std::log1p(std::exp(lo - hi)) - M_LN2;

    return {a.get_str(), b.get_str(), norm, reg};
}

std::int64_t narrow_class_number(std::int64_t D) {
    if (D <= 0 || !is_fundamental_discriminant(D))
        throw validation_error("narrow_class_number: not a fundamental discriminant > 0");
    const std::int64_t s = isqrt64(D);

    struct Form {
        std::int64_t a, b, c;
        bool operator<(const Form& o) const {
            return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
        }
    };

    // reduced: 0 < b < sqrt D and sqrt D - b < 2|a| < sqrt D + b
    std::map<Form, bool> visited;
    for (std::int64_t b = (D & 1) ? 1 : 2; b <= s; b += 2) {
        std::int64_t n = (D - b * b) / 4; // a c = -n
        for (std::int64_t a = 1; a * a <= n; ++a) {
            if (n % a) continue;
            for (std::int64_t aa : {a, n / a}) {
                // check interval strictly: sqrt D - b < 2 aa < sqrt D + b
                // integer-safe: (2aa - b)^2 < D on the left side given signs
                std::int64_t t = 2 * aa;
                bool left = (t >= b) ? ((t - b) * (t - b) < D) : true;
                bool right = (t + b) * (t + b) > D;
                if (!(left && right)) continue;
                std::int64_t cc = -(n / aa);
                for (std::int64_t sign : {std::int64_t(1), std::int64_t(-1)}) {
                    Form f{sign * aa, b, sign * cc};
                    if (std::gcd(std::gcd(std::llabs(f.a), f.b), std::llabs(f.c)) != 1) continue;
                    visited.emplace(f, false);
                }
                if (aa * aa == n) break; // divisor pair coincides
            }
        }
    }

    auto reduce_step = [&](Form f) -> Form {
        std::int64_t c = f.c;
        std::int64_t ac = std::llabs(c);
        std::int64_t bp = s - ((s + f.b) % (2 * ac) + 2 * ac) % (2 * ac);
        std::int64_t cn = (bp * bp - D) / (4 * c);
        return Form{c, bp, cn};
    };

    std::int64_t cycles = 0;
    for (auto& [start, seen] : visited) {
        if (seen) continue;
        ++cycles;
        Form f = start;
        while (true) {
            auto it = visited.find(f);
            if (it == visited.end())
                throw computation_error("narrow_class_number: reduction left the reduced set, D=" +
                                        std::to_string(D));
            if (it->second) break;
            it->second = true;
            f = reduce_step(f);
        }
    }
    return cycles;
}

QuadraticInvariants quadratic_invariants(std::int64_t D) {
    if (!is_fundamental_discriminant(D))
        throw validation_error("quadratic_invariants: " + std::to_string(D) +
                               " is not a fundamental discriminant");
    if (D < 0) {
        int w = (D == -3) ? 6 : (D == -4) ? 4 : 2;
        return {imaginary_class_number(D), 1.0, w, 0};
    }
    FundamentalUnit u = fundamental_unit(D);
    std::int64_t hplus = narrow_class_number(D);
    std::int64_t h = hplus;
    if (u.norm == 1) {
        if (hplus % 2 != 0)
            throw computation_error("quadratic_invariants: odd narrow class number with norm +1 unit, D=" +
                                    std::to_string(D));
        h = hplus / 2;
    }
    return {h, u.regulator, 2, u.norm};
}

NumberField quadratic_field(std::int64_t D, const std::string& label) {
    QuadraticInvariants inv = quadratic_invariants(D);
    NumberField f;
    f.degree = 2;
    f.discriminant = D;
    f.real_embeddings = D > 0 ? 2 : 0;
    f.complex_embeddings = D > 0 ? 0 : 1;
    f.class_number = inv.class_number;
    f.regulator = inv.regulator;
    f.roots_of_unity = inv.roots_of_unity;
    if (D % 4 == 0)
        f.polynomial = {-(D / 4), 0, 1}; // x^2 - D/4
    else
        f.polynomial = {(1 - D) / 4, -1, 1}; // x^2 - x + (1-D)/4
    f.label = label.empty() ? "Q(sqrt(" + std::to_string(D) + "))" : label;
    f.validate();
    return f;
}

namespace {

NumberField field_from_json(const json& doc) {
    if (!doc.is_object()) throw validation_error("field definition must be a JSON object");
    std::string label = doc.value("label", "");

    if (doc.contains("quadratic_discriminant")) {
        std::int64_t D = doc.at("quadratic_discriminant").get<std::int64_t>();
        if (!is_fundamental_discriminant(D))
            throw validation_error("field '" + label + "': quadratic discriminant " +
                                   std::to_string(D) + " is not fundamental");
        return quadratic_field(D, label);
    }

    NumberField f;
    f.label = label;
    try {
        f.degree = doc.at("degree").get<int>();
        f.discriminant = doc.at("discriminant").get<std::int64_t>();
        f.real_embeddings = doc.at("r1").get<int>();
        f.complex_embeddings = doc.at("r2").get<int>();
        f.class_number = doc.at("class_number").get<std::int64_t>();
        f.regulator = doc.at("regulator").get<double>();
        f.roots_of_unity = doc.at("roots_of_unity").get<int>();
    } catch (const json::exception& e) {
        throw validation_error("field '" + label + "': missing or ill-typed invariant: " + e.what());
    }
    if (doc.contains("polynomial"))
        f.polynomial = doc.at("polynomial").get<std::vector<std::int64_t>>();
    if (doc.contains("splitting")) {
        for (const auto& entry : doc.at("splitting")) {
            std::int64_t p = entry.at("p").get<std::int64_t>();
            std::vector<std::pair<int, int>> factors;
            for (const auto& ef : entry.at("factors"))
                factors.emplace_back(ef.at(0).get<int>(), ef.at(1).get<int>());
            f.splitting_overrides[p] = factors;
        }
    }
    f.validate();
    return f;
}

} // namespace

NumberField load_field(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw validation_error(std::string("field definition parse error: ") + e.what());
    }
    return field_from_json(doc);
}

std::vector<NumberField> load_fields_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open field definition file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw validation_error("parse error in " + path + ": " + e.what());
    }
    std::vector<NumberField> fields;
    if (doc.is_array())
        for (const auto& item : doc) fields.push_back(field_from_json(item));
    else
        fields.push_back(field_from_json(doc));
    return fields;
}

} // namespace nfb
