#pragma once

// Classical Heisenberg Lie algebra h(4) with basis (n, e, a+, a) and
// relations [a, a+] = e, [n, a] = -a, [n, a+] = a+, e central, together
// with exact classical Yang-Baxter checks.  Coefficients are polynomials
// in the four formal indeterminates (h, w, mu, nu) over exact rationals,
// so one residual computation covers all parameter values at once.
//
// Brackets of basis elements are again basis elements, so each term of
// [r12, r13] + [r12, r23] + [r13, r23] keeps Lie degree one in every slot
// and the whole residual lives in a 4x4x4 coefficient array.

#include "qheis/series.hpp"

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qheis {

/// Polynomial in (h, w, mu, nu) with exact rational coefficients.
class Poly4 {
  public:
    using Key = std::array<int, 4>;

    Poly4() = default;
    explicit Poly4(const Rational &c) { add(Key{0, 0, 0, 0}, c); }

    static Poly4 var(int i) {
        Poly4 p;
        Key k{0, 0, 0, 0};
        k[static_cast<std::size_t>(i)] = 1;
        p.add(k, 1);
        return p;
    }
    static Poly4 h() { return var(0); }
    static Poly4 w() { return var(1); }
    static Poly4 mu() { return var(2); }
    static Poly4 nu() { return var(3); }

    void add(const Key &k, const Rational &c) {
        if (c == 0)
            return;
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            coeffs_.emplace(k, c);
            return;
        }
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }

    bool is_zero() const { return coeffs_.empty(); }

    friend Poly4 operator+(const Poly4 &x, const Poly4 &y) {
        Poly4 r = x;
        for (const auto &[k, c] : y.coeffs_)
            r.add(k, c);
        return r;
    }
    friend Poly4 operator-(const Poly4 &x, const Poly4 &y) {
        Poly4 r = x;
        for (const auto &[k, c] : y.coeffs_)
            r.add(k, -c);
        return r;
    }
    friend Poly4 operator-(const Poly4 &x) { return Poly4() - x; }
    friend Poly4 operator*(const Poly4 &x, const Poly4 &y) {
        Poly4 r;
        for (const auto &[kx, cx] : x.coeffs_)
            for (const auto &[ky, cy] : y.coeffs_) {
                Key k;
                for (std::size_t i = 0; i < 4; ++i)
                    k[i] = kx[i] + ky[i];
                r.add(k, cx * cy);
            }
        return r;
    }
    friend Poly4 operator*(const Poly4 &x, const Rational &c) {
        Poly4 r;
        for (const auto &[k, v] : x.coeffs_)
            r.add(k, v * c);
        return r;
    }
    Poly4 &operator+=(const Poly4 &y) { return *this = *this + y; }
    friend bool operator==(const Poly4 &x, const Poly4 &y) = default;

    std::string str() const {
        if (coeffs_.empty())
            return "0";
        static const char *names[] = {"h", "w", "mu", "nu"};
        std::ostringstream os;
        bool first = true;
        for (const auto &[k, c] : coeffs_) {
            if (!first)
                os << " + ";
            first = false;
            os << c;
            for (std::size_t i = 0; i < 4; ++i)
                if (k[i] > 0) {
                    os << "*" << names[i];
                    if (k[i] > 1)
                        os << "^" << k[i];
                }
        }
        return os.str();
    }

  private:
    std::map<Key, Rational> coeffs_;
};

/// Basis indices in the fixed order (n, e, a+, a).
enum class LieGen : int { n = 0, e = 1, ap = 2, a = 3 };

/// Element of h(4): coefficients over the basis (n, e, a+, a).
struct LieElement {
    std::array<Poly4, 4> c;

    static LieElement basis(LieGen g) {
        LieElement x;
        x.c[static_cast<std::size_t>(g)] = Poly4(Rational(1));
        return x;
    }

    bool is_zero() const {
        for (const auto &p : c)
            if (!p.is_zero())
                return false;
        return true;
    }

    friend LieElement operator+(const LieElement &x, const LieElement &y) {
        LieElement r;
        for (std::size_t i = 0; i < 4; ++i)
            r.c[i] = x.c[i] + y.c[i];
        return r;
    }
    friend LieElement operator*(const LieElement &x, const Poly4 &p) {
        LieElement r;
        for (std::size_t i = 0; i < 4; ++i)
            r.c[i] = x.c[i] * p;
        return r;
    }
    friend bool operator==(const LieElement &x, const LieElement &y) = default;
};

/// Structure constants: [basis_x, basis_y] as a LieElement.
/// Nonzero brackets: [n, a+] = a+, [n, a] = -a, [a, a+] = e.
inline LieElement basis_bracket(int x, int y) {
    LieElement r;
    auto idx = [](LieGen g) { return static_cast<int>(g); };
    if (x == y)
        return r;
    if (x > y) {
        r = basis_bracket(y, x);
        for (auto &p : r.c)
            p = -p;
        return r;
    }
    if (x == idx(LieGen::n) && y == idx(LieGen::ap))
        r.c[static_cast<std::size_t>(LieGen::ap)] = Poly4(Rational(1));
    else if (x == idx(LieGen::n) && y == idx(LieGen::a))
        r.c[static_cast<std::size_t>(LieGen::a)] = Poly4(Rational(-1));
    else if (x == idx(LieGen::ap) && y == idx(LieGen::a))
        r.c[static_cast<std::size_t>(LieGen::e)] = Poly4(Rational(-1)); // [a, a+] = e
    return r;
}

inline LieElement lie_bracket(const LieElement &x, const LieElement &y) {
    LieElement r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (x.c[static_cast<std::size_t>(i)].is_zero() ||
                y.c[static_cast<std::size_t>(j)].is_zero())
                continue;
            LieElement b = basis_bracket(i, j);
            r = r + b * (x.c[static_cast<std::size_t>(i)] * y.c[static_cast<std::size_t>(j)]);
        }
    return r;
}

/// r = sum c[x][y] basis_x (x) basis_y.
struct ClassicalR {
    std::array<std::array<Poly4, 4>, 4> c;

    void add(LieGen x, LieGen y, const Poly4 &p) {
        c[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] += p;
    }

    friend ClassicalR operator+(const ClassicalR &x, const ClassicalR &y) {
        ClassicalR r;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                r.c[i][j] = x.c[i][j] + y.c[i][j];
        return r;
    }
    friend ClassicalR operator*(const ClassicalR &x, const Poly4 &p) {
        ClassicalR r;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                r.c[i][j] = x.c[i][j] * p;
        return r;
    }
};

/// a (x) a+ - e (x) n, the standard classical r-matrix.
inline ClassicalR r_standard() {
    ClassicalR r;
    r.add(LieGen::a, LieGen::ap, Poly4(Rational(1)));
    r.add(LieGen::e, LieGen::n, Poly4(Rational(-1)));
    return r;
}

/// a (x) a+ - (e (x) n + n (x) e)/2, the symmetrized standard form.
inline ClassicalR r_standard_symmetric() {
    ClassicalR r;
    r.add(LieGen::a, LieGen::ap, Poly4(Rational(1)));
    r.add(LieGen::e, LieGen::n, Poly4(Rational(-1, 2)));
    r.add(LieGen::n, LieGen::e, Poly4(Rational(-1, 2)));
    return r;
}

/// n (x) a+ - a+ (x) n, the nonstandard (triangular) r-matrix.
inline ClassicalR r_nonstandard() {
    ClassicalR r;
    r.add(LieGen::n, LieGen::ap, Poly4(Rational(1)));
    r.add(LieGen::ap, LieGen::n, Poly4(Rational(-1)));
    return r;
}

/// mu (a (x) e - e (x) a) + nu (a+ (x) e - e (x) a+).
inline ClassicalR r_mu_nu() {
    ClassicalR r;
    r.add(LieGen::a, LieGen::e, Poly4::mu());
    r.add(LieGen::e, LieGen::a, -Poly4::mu());
    r.add(LieGen::ap, LieGen::e, Poly4::nu());
    r.add(LieGen::e, LieGen::ap, -Poly4::nu());
    return r;
}

/// 2h (a (x) a+ - e (x) n) + w (n (x) a+ - a+ (x) n), the two-parameter
/// combination whose quantization the workbench studies.
inline ClassicalR r_two_parameter() {
    return r_standard() * (Poly4::h() * Rational(2)) + r_nonstandard() * Poly4::w();
}

/// Arity-3 tensor over the Lie algebra: coefficients of basis_i (x) basis_j
/// (x) basis_k.
struct LieTensor3 {
    std::array<std::array<std::array<Poly4, 4>, 4>, 4> c;

    bool is_zero() const {
        for (const auto &pi : c)
            for (const auto &pj : pi)
                for (const auto &p : pj)
                    if (!p.is_zero())
                        return false;
        return true;
    }

    int term_count() const {
        int n = 0;
        for (const auto &pi : c)
            for (const auto &pj : pi)
                for (const auto &p : pj)
                    if (!p.is_zero())
                        ++n;
        return n;
    }

    friend bool operator==(const LieTensor3 &x, const LieTensor3 &y) = default;
};

/// [r12, s13] + [r12, t23] + [s13, t23] with possibly distinct elements in
/// the three slot pairs; the constant and spectral residuals are both
/// instances of this trilinear form.
inline LieTensor3 cybe_residual(const ClassicalR &r12, const ClassicalR &s13,
                                const ClassicalR &t23) {
    LieTensor3 out;
    auto place = [&](const LieElement &b, const Poly4 &coeff, int slot, int u, int v) {
        for (int g = 0; g < 4; ++g) {
            const Poly4 &bc = b.c[static_cast<std::size_t>(g)];
            if (bc.is_zero())
                continue;
            int i = slot == 0 ? g : u, j = slot == 1 ? g : (slot == 0 ? u : v),
                k = slot == 2 ? g : v;
            out.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                 [static_cast<std::size_t>(k)] += bc * coeff;
        }
    };
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            const Poly4 &c1 = r12.c[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            if (!c1.is_zero())
                for (int x2 = 0; x2 < 4; ++x2)
                    for (int z = 0; z < 4; ++z) {
                        // [r12, s13]: bracket in slot 1
                        const Poly4 &c2 =
                            s13.c[static_cast<std::size_t>(x2)][static_cast<std::size_t>(z)];
                        if (!c2.is_zero())
                            place(basis_bracket(x, x2), c1 * c2, 0, y, z);
                        // [r12, t23]: bracket in slot 2
                        const Poly4 &c3 =
                            t23.c[static_cast<std::size_t>(x2)][static_cast<std::size_t>(z)];
                        if (!c3.is_zero())
                            place(basis_bracket(y, x2), c1 * c3, 1, x, z);
                    }
            // [s13, t23]: bracket in slot 3
            const Poly4 &c1b = s13.c[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            if (!c1b.is_zero())
                for (int y2 = 0; y2 < 4; ++y2)
                    for (int z2 = 0; z2 < 4; ++z2) {
                        const Poly4 &c2 =
                            t23.c[static_cast<std::size_t>(y2)][static_cast<std::size_t>(z2)];
                        if (!c2.is_zero())
                            place(basis_bracket(y, z2), c1b * c2, 2, x, y2);
                    }
        }
    return out;
}

inline LieTensor3 cybe_residual(const ClassicalR &r) { return cybe_residual(r, r, r); }

/// r(u) = w (n (x) a+ - a+ (x) n) + 2h (x_u a (x) a+ - e (x) n), with the
/// exponential of the spectral parameter supplied as a rational value x_u.
inline ClassicalR r_spectral(const Rational &x_u) {
    ClassicalR r = r_nonstandard() * Poly4::w();
    ClassicalR s;
    s.add(LieGen::a, LieGen::ap, Poly4(x_u));
    s.add(LieGen::e, LieGen::n, Poly4(Rational(-1)));
    return r + s * (Poly4::h() * Rational(2));
}

/// [r12(u), r13(u+v)] + [r12(u), r23(v)] + [r13(u+v), r23(v)] with
/// e^{u} := x_u and e^{u+v} := x_u * x_v.
inline LieTensor3 spectral_cybe_residual(const Rational &x_u, const Rational &x_v) {
    if (x_u == 0 || x_v == 0)
        throw std::invalid_argument("spectral_cybe_residual: x_u, x_v must be nonzero");
    return cybe_residual(r_spectral(x_u), r_spectral(x_u * x_v), r_spectral(x_v));
}

} // namespace qheis
