#pragma once

#include <array>
#include <stdexcept>

#include "hodgemhd/poly_form.hpp"

namespace hodgemhd {

// Dimension-3 identifications: Λ¹ and Λ² both with R³, Λ⁰ and Λ³ with R.
// The 2-form proxy vector is (c_23, -c_13, c_12), the unique choice under
// which d acts as grad/curl/div and δ as -div/curl/-grad down the complex.

inline std::array<PolyScalar, 3> vec_of_1form(const PolyForm& u) {
    if (u.dim() != 3 || u.grade() != 1)
        throw std::invalid_argument("vec_of_1form: expects a 1-form in dimension 3");
    return {u.coeff(0b001), u.coeff(0b010), u.coeff(0b100)};
}

inline std::array<PolyScalar, 3> vec_of_2form(const PolyForm& b) {
    if (b.dim() != 3 || b.grade() != 2)
        throw std::invalid_argument("vec_of_2form: expects a 2-form in dimension 3");
    return {b.coeff(0b110), -b.coeff(0b101), b.coeff(0b011)};
}

inline PolyScalar scalar_of_3form(const PolyForm& w) {
    if (w.dim() != 3 || w.grade() != 3)
        throw std::invalid_argument("scalar_of_3form: expects a 3-form in dimension 3");
    return w.coeff(0b111);
}

inline PolyForm form_of_vec1(const std::array<PolyScalar, 3>& v) {
    PolyForm u(3, 1);
    u.add(0b001, v[0]);
    u.add(0b010, v[1]);
    u.add(0b100, v[2]);
    return u;
}

inline PolyForm form_of_vec2(const std::array<PolyScalar, 3>& v) {
    PolyForm b(3, 2);
    b.add(0b110, v[0]);
    b.add(0b101, -v[1]);
    b.add(0b011, v[2]);
    return b;
}

// Plain coordinate vector calculus, written out directly from partial
// derivatives. This is the independent route the dictionary is checked
// against; it never touches the blade machinery.

inline std::array<PolyScalar, 3> grad3(const PolyScalar& f) {
    return {f.derivative(1), f.derivative(2), f.derivative(3)};
}

inline std::array<PolyScalar, 3> curl3(const std::array<PolyScalar, 3>& v) {
    return {v[2].derivative(2) - v[1].derivative(3),
            v[0].derivative(3) - v[2].derivative(1),
            v[1].derivative(1) - v[0].derivative(2)};
}

inline PolyScalar div3(const std::array<PolyScalar, 3>& v) {
    return v[0].derivative(1) + v[1].derivative(2) + v[2].derivative(3);
}

inline std::array<PolyScalar, 3> cross3(const std::array<PolyScalar, 3>& a,
                                        const std::array<PolyScalar, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

} // namespace hodgemhd
