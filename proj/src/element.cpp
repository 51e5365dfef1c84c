#include "octlab/element.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace octlab {

namespace {

void require_same_table(const Element& a, const Element& b) {
    if (!same_table(*a.table(), *b.table())) {
        throw std::invalid_argument("table mismatch");
    }
}

constexpr double kZeroImaginary = 1e-300;

}  // namespace

Element::Element(TablePtr table, std::array<double, 8> coeffs) : table_(std::move(table)), c_(coeffs) {
    for (int k = table_->dim(); k < 8; ++k) {
        if (c_[static_cast<std::size_t>(k)] != 0.0) {
            throw std::invalid_argument("coefficient beyond table dimension");
        }
    }
}

Element Element::zero(TablePtr table) {
    return Element(std::move(table), {});
}

Element Element::scalar(TablePtr table, double s) {
    std::array<double, 8> c{};
    c[0] = s;
    return Element(std::move(table), c);
}

Element Element::basis(TablePtr table, int k) {
    if (k < 0 || k >= table->dim()) {
        throw std::invalid_argument("basis index out of range");
    }
    std::array<double, 8> c{};
    c[static_cast<std::size_t>(k)] = 1.0;
    return Element(std::move(table), c);
}

Element Element::imaginary_part() const {
    std::array<double, 8> c = c_;
    c[0] = 0.0;
    return Element(table_, c);
}

double Element::max_abs() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
}

Element Element::operator-() const {
    std::array<double, 8> c{};
    for (std::size_t k = 0; k < 8; ++k) c[k] = -c_[k];
    return Element(table_, c);
}

Element operator+(const Element& a, const Element& b) {
    require_same_table(a, b);
    std::array<double, 8> c{};
    for (std::size_t k = 0; k < 8; ++k) c[k] = a.coeffs()[k] + b.coeffs()[k];
    return Element(a.table(), c);
}

Element operator-(const Element& a, const Element& b) {
    require_same_table(a, b);
    std::array<double, 8> c{};
    for (std::size_t k = 0; k < 8; ++k) c[k] = a.coeffs()[k] - b.coeffs()[k];
    return Element(a.table(), c);
}

Element operator*(const Element& a, const Element& b) {
    require_same_table(a, b);
    const StructureTable& t = *a.table();
    const int d = t.dim();
    std::array<double, 8> out{};
    for (int i = 0; i < d; ++i) {
        const double ai = a.coeff(i);
        if (ai == 0.0) continue;
        for (int j = 0; j < d; ++j) {
            const double bj = b.coeff(j);
            if (bj == 0.0) continue;
            out[static_cast<std::size_t>(t.product_index(i, j))] += t.product_sign(i, j) * ai * bj;
        }
    }
    return Element(a.table(), out);
}

Element operator*(double s, const Element& a) {
    std::array<double, 8> c{};
    for (std::size_t k = 0; k < 8; ++k) c[k] = s * a.coeffs()[k];
    return Element(a.table(), c);
}

Element operator*(const Element& a, double s) {
    return s * a;
}

Element conjugate(const Element& a) {
    std::array<double, 8> c{};
    c[0] = a.coeff(0);
    for (int k = 1; k < a.dim(); ++k) c[static_cast<std::size_t>(k)] = -a.coeff(k);
    return Element(a.table(), c);
}

double norm(const Element& a) {
    double s = 0.0;
    for (double v : a.coeffs()) s += v * v;
    return std::sqrt(s);
}

Element inverse(const Element& a) {
    const double n2 = norm(a) * norm(a);
    if (n2 <= 0.0) {
        throw std::domain_error("zero element");
    }
    return (1.0 / n2) * conjugate(a);
}

Element commutator(const Element& a, const Element& b) {
    return a * b - b * a;
}

Element associator(const Element& a, const Element& b, const Element& c) {
    return (a * b) * c - a * (b * c);
}

Element exp_elem(const Element& a) {
    const double s = a.real_part();
    const Element v = a.imaginary_part();
    const double vn = norm(v);
    const double es = std::exp(s);
    if (vn < kZeroImaginary) {
        return Element::scalar(a.table(), es);
    }
    return Element::scalar(a.table(), es * std::cos(vn)) + (es * std::sin(vn) / vn) * v;
}

Element log_elem(const Element& q) {
    if (std::abs(norm(q) - 1.0) > 1e-9) {
        throw std::domain_error("non-unit argument");
    }
    const double s = q.real_part();
    const Element v = q.imaginary_part();
    const double vn = norm(v);
    if (s < 0.0 && vn <= 1e-12) {
        // at (or within rounding of) -1 the axis is undetermined
        throw std::domain_error("branch singularity");
    }
    if (vn < kZeroImaginary) {
        return Element::zero(q.table());
    }
    return (std::atan2(vn, s) / vn) * v;
}

std::string to_string(const Element& a) {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < a.dim(); ++k) {
        const double v = a.coeff(k);
        if (v == 0.0) continue;
        if (!first) out << (v > 0 ? " + " : " - ");
        else if (v < 0) out << "-";
        first = false;
        const double av = std::abs(v);
        if (k == 0) {
            out << av;
        } else {
            if (av != 1.0) out << av << "*";
            out << "i" << k;
        }
    }
    if (first) out << "0";
    return out.str();
}

CElement::CElement(Element re, Element im) : re_(std::move(re)), im_(std::move(im)) {
    if (!same_table(*re_.table(), *im_.table())) {
        throw std::invalid_argument("table mismatch");
    }
}

CElement CElement::real(Element re) {
    Element im = Element::zero(re.table());
    return CElement(std::move(re), std::move(im));
}

CElement CElement::imaginary(Element im) {
    Element re = Element::zero(im.table());
    return CElement(std::move(re), std::move(im));
}

CElement CElement::zero(TablePtr table) {
    return CElement(Element::zero(table), Element::zero(table));
}

CElement CElement::unit_i(TablePtr table) {
    return CElement(Element::zero(table), Element::scalar(table, 1.0));
}

double CElement::max_abs() const {
    return std::max(re_.max_abs(), im_.max_abs());
}

CElement CElement::operator-() const {
    return CElement(-re_, -im_);
}

CElement operator+(const CElement& a, const CElement& b) {
    return CElement(a.re() + b.re(), a.im() + b.im());
}

CElement operator-(const CElement& a, const CElement& b) {
    return CElement(a.re() - b.re(), a.im() - b.im());
}

CElement operator*(const CElement& a, const CElement& b) {
    // (ar + I ai)(br + I bi) with I central and I^2 = -1
    return CElement(a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re());
}

CElement operator*(double s, const CElement& a) {
    return CElement(s * a.re(), s * a.im());
}

CElement operator*(std::complex<double> z, const CElement& a) {
    return CElement(z.real() * a.re() - z.imag() * a.im(), z.real() * a.im() + z.imag() * a.re());
}

double norm(const CElement& a) {
    return std::hypot(norm(a.re()), norm(a.im()));
}

CElement commutator(const CElement& a, const CElement& b) {
    return a * b - b * a;
}

CElement associator(const CElement& a, const CElement& b, const CElement& c) {
    return (a * b) * c - a * (b * c);
}

std::string to_string(const CElement& a) {
    std::ostringstream out;
    out << "(" << to_string(a.re()) << ") + I*(" << to_string(a.im()) << ")";
    return out.str();
}

}  // namespace octlab
