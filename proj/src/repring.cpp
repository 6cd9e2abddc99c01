#include "kform/repring.hpp"

#include <sstream>

#include "kform/errors.hpp"

namespace kform {

namespace {

void require_same_table(const VirtualCharacter& u, const VirtualCharacter& v) {
    if (u.table != v.table)
        throw TableMismatch("virtual characters live over different tables");
}

}  // namespace

VirtualCharacter::VirtualCharacter(TablePtr t, std::vector<BigInt> c)
    : table(std::move(t)), coeffs(std::move(c)) {
    if (coeffs.size() != table->n_irreducibles())
        throw DimensionMismatch("coefficient count != irreducible count");
}

bool VirtualCharacter::is_genuine() const {
    for (const auto& c : coeffs)
        if (c < 0) return false;
    return true;
}

bool VirtualCharacter::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

VirtualCharacter VirtualCharacter::operator+(const VirtualCharacter& o) const {
    require_same_table(*this, o);
    auto r = coeffs;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.coeffs[i];
    return {table, std::move(r)};
}

VirtualCharacter VirtualCharacter::operator-(const VirtualCharacter& o) const {
    require_same_table(*this, o);
    auto r = coeffs;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.coeffs[i];
    return {table, std::move(r)};
}

VirtualCharacter VirtualCharacter::operator-() const {
    auto r = coeffs;
    for (auto& c : r) c = -c;
    return {table, std::move(r)};
}

VirtualCharacter VirtualCharacter::scaled(const BigInt& n) const {
    auto r = coeffs;
    for (auto& c : r) c *= n;
    return {table, std::move(r)};
}

bool VirtualCharacter::operator==(const VirtualCharacter& o) const {
    return table == o.table && coeffs == o.coeffs;
}

Cyclotomic VirtualCharacter::value_at(std::size_t class_index) const {
    Cyclotomic v(0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        v = v + Cyclotomic(coeffs[i]) * table->irreducibles[i][class_index];
    }
    return v;
}

std::vector<Cyclotomic> VirtualCharacter::class_values() const {
    std::vector<Cyclotomic> out;
    out.reserve(table->n_classes());
    for (std::size_t c = 0; c < table->n_classes(); ++c) out.push_back(value_at(c));
    return out;
}

BigInt VirtualCharacter::augmentation() const {
    BigInt d = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        d += coeffs[i] * table->dimension(i);
    return d;
}

std::string VirtualCharacter::to_string() const {
    std::ostringstream os;
    const std::size_t trivial = table->trivial_index();
    bool first = true;
    auto emit = [&](const BigInt& c, const std::string& name, bool bare_int) {
        if (c == 0) return;
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (bare_int) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << '*';
            os << name;
        }
    };
    // trivial coefficient renders as a bare integer, matching the grammar
    emit(coeffs[trivial], "", true);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i == trivial) continue;
        emit(coeffs[i], table->irreducible_names[i], false);
    }
    if (first) os << '0';
    return os.str();
}

VirtualCharacter zero_character(TablePtr t) {
    std::vector<BigInt> c(t->n_irreducibles(), BigInt(0));
    return {std::move(t), std::move(c)};
}

VirtualCharacter trivial_character(TablePtr t) {
    auto v = zero_character(t);
    v.coeffs[t->trivial_index()] = 1;
    return v;
}

VirtualCharacter irreducible_character(TablePtr t, std::size_t i) {
    auto v = zero_character(std::move(t));
    v.coeffs.at(i) = 1;
    return v;
}

VirtualCharacter named_q8_element(const std::string& name) {
    auto t = builtin_quaternion8();
    // basis order (1, x_i, x_j, x_k, y)
    if (name == "alpha") return {t, {1, -1, 0, 0, 0}};
    if (name == "beta") return {t, {1, 0, -1, 0, 0}};
    if (name == "gamma") return {t, {3, -1, -1, -1, 0}};
    if (name == "delta") return {t, {2, 0, 0, 0, -1}};
    throw UnknownName("unknown Q8 element '" + name + "'", name);
}

VirtualCharacter decompose_class_function(TablePtr t,
                                          const std::vector<Cyclotomic>& values) {
    if (values.size() != t->n_classes())
        throw DimensionMismatch("class-value count != class count");
    std::vector<BigInt> coeffs;
    coeffs.reserve(t->n_irreducibles());
    for (std::size_t i = 0; i < t->n_irreducibles(); ++i) {
        Cyclotomic sum(0);
        for (std::size_t c = 0; c < t->n_classes(); ++c)
            sum = sum + Cyclotomic(BigInt(t->classes[c].size)) * values[c] *
                            t->irreducibles[i][c].conjugate();
        Rational r = sum.as_rational() / Rational(t->group_order);
        if (boost::multiprecision::denominator(r) != 1)
            throw NotAnInteger("decomposition coefficient of " + t->irreducible_names[i] +
                               " is not an integer");
        coeffs.push_back(boost::multiprecision::numerator(r));
    }
    return {std::move(t), std::move(coeffs)};
}

BigInt inner_product(const VirtualCharacter& u, const VirtualCharacter& v) {
    require_same_table(u, v);
    const auto& t = *u.table;
    Cyclotomic sum(0);
    auto uv = u.class_values();
    auto vv = v.class_values();
    for (std::size_t c = 0; c < t.n_classes(); ++c)
        sum = sum + Cyclotomic(BigInt(t.classes[c].size)) * uv[c] * vv[c].conjugate();
    Rational r = sum.as_rational() / Rational(t.group_order);
    if (boost::multiprecision::denominator(r) != 1)
        throw NotAnInteger("inner product is not an integer");
    return boost::multiprecision::numerator(r);
}

VirtualCharacter multiply(const VirtualCharacter& u, const VirtualCharacter& v) {
    require_same_table(u, v);
    auto uv = u.class_values();
    auto vv = v.class_values();
    std::vector<Cyclotomic> prod;
    prod.reserve(uv.size());
    for (std::size_t c = 0; c < uv.size(); ++c) prod.push_back(uv[c] * vv[c]);
    return decompose_class_function(u.table, prod);
}

VirtualCharacter adams(const VirtualCharacter& v, long k) {
    if (k < 1) throw Error("Adams operation requires k >= 1");
    const auto& t = *v.table;
    auto values = v.class_values();
    std::vector<Cyclotomic> out;
    out.reserve(t.n_classes());
    for (std::size_t c = 0; c < t.n_classes(); ++c)
        out.push_back(values[static_cast<std::size_t>(t.classes[c].power_class(k))]);
    return decompose_class_function(v.table, out);
}

VirtualCharacter exterior_power(const VirtualCharacter& v, long q) {
    if (q < 0) throw Error("exterior power requires q >= 0");
    if (!v.is_genuine())
        throw NonGenuineInput("exterior power of a non-genuine character: " +
                              v.to_string());
    // q*lambda^q = sum_{m=1..q} (-1)^{m-1} psi^m lambda^{q-m}, lambda^0 = 1
    std::vector<VirtualCharacter> lambda = {trivial_character(v.table)};
    std::vector<VirtualCharacter> psi = {trivial_character(v.table)};  // psi[0] unused
    for (long m = 1; m <= q; ++m) psi.push_back(adams(v, m));
    for (long j = 1; j <= q; ++j) {
        VirtualCharacter acc = zero_character(v.table);
        for (long m = 1; m <= j; ++m) {
            auto term = multiply(psi[static_cast<std::size_t>(m)],
                                 lambda[static_cast<std::size_t>(j - m)]);
            acc = (m % 2 == 1) ? acc + term : acc - term;
        }
        for (auto& c : acc.coeffs) {
            if (c % j != 0)
                throw NotAnInteger("Newton recursion does not divide by " +
                                   std::to_string(j));
            c /= j;
        }
        lambda.push_back(std::move(acc));
    }
    return lambda[static_cast<std::size_t>(q)];
}

VirtualCharacter lambda_minus_one(const VirtualCharacter& v) {
    if (!v.is_genuine())
        throw NonGenuineInput("lambda_{-1} of a non-genuine character: " + v.to_string());
    long d = static_cast<long>(v.augmentation());
    VirtualCharacter acc = zero_character(v.table);
    for (long q = 0; q <= d; ++q) {
        auto term = exterior_power(v, q);
        acc = (q % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

BigInt fixed_subspace_dim(const VirtualCharacter& v, std::size_t class_index) {
    const auto& cls = v.table->classes.at(class_index);
    auto values = v.class_values();
    Cyclotomic sum(0);
    for (long k = 0; k < cls.representative_order; ++k)
        sum = sum + values[static_cast<std::size_t>(cls.power_class(k))];
    Rational r = sum.as_rational() / Rational(cls.representative_order);
    if (boost::multiprecision::denominator(r) != 1)
        throw NotAnInteger("fixed-subspace dimension is not an integer");
    return boost::multiprecision::numerator(r);
}

FreenessVerdict is_free_on_sphere(const VirtualCharacter& v) {
    if (!v.is_genuine())
        throw NonGenuineInput("freeness test needs a genuine character: " + v.to_string());
    for (std::size_t c = 1; c < v.table->n_classes(); ++c) {
        if (fixed_subspace_dim(v, c) != 0) return {false, v.table->classes[c].label};
    }
    return {true, ""};
}

}  // namespace kform
