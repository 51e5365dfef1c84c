#pragma once

#include <array>
#include <complex>
#include <string>

#include "octlab/structure_table.hpp"

namespace octlab {

// Real coefficient vector over the basis {1, i_1, ..., i_{dim-1}} of one
// structure table. Values are immutable; all operations are pure.
class Element {
  public:
    Element(TablePtr table, std::array<double, 8> coeffs);

    static Element zero(TablePtr table);
    static Element scalar(TablePtr table, double s);
    static Element basis(TablePtr table, int k);

    const TablePtr& table() const { return table_; }
    int dim() const { return table_->dim(); }
    double coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    const std::array<double, 8>& coeffs() const { return c_; }

    double real_part() const { return c_[0]; }
    Element imaginary_part() const;
    double max_abs() const;

    Element operator-() const;

  private:
    TablePtr table_;
    std::array<double, 8> c_{};
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Element& a, const Element& b);
Element operator*(double s, const Element& a);
Element operator*(const Element& a, double s);

Element conjugate(const Element& a);
double norm(const Element& a);
Element inverse(const Element& a);
Element commutator(const Element& a, const Element& b);
Element associator(const Element& a, const Element& b, const Element& c);

// exp(s + v) = e^s (cos|v| + (v/|v|) sin|v|); log is the principal branch
// (v/|v|) atan2(|v|, s), defined for unit-norm arguments away from -1.
Element exp_elem(const Element& a);
Element log_elem(const Element& q);

std::string to_string(const Element& a);

// Complexified element re + I*im with I the central commuting unit, I^2 = -1.
class CElement {
  public:
    CElement(Element re, Element im);

    static CElement real(Element re);
    static CElement imaginary(Element im);  // I*im
    static CElement zero(TablePtr table);
    static CElement unit_i(TablePtr table);  // the central unit I itself

    const Element& re() const { return re_; }
    const Element& im() const { return im_; }
    const TablePtr& table() const { return re_.table(); }

    double max_abs() const;
    CElement operator-() const;

  private:
    Element re_;
    Element im_;
};

CElement operator+(const CElement& a, const CElement& b);
CElement operator-(const CElement& a, const CElement& b);
CElement operator*(const CElement& a, const CElement& b);
CElement operator*(double s, const CElement& a);
CElement operator*(std::complex<double> z, const CElement& a);

double norm(const CElement& a);
CElement commutator(const CElement& a, const CElement& b);
CElement associator(const CElement& a, const CElement& b, const CElement& c);

std::string to_string(const CElement& a);

}  // namespace octlab
