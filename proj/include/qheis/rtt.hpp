#pragma once

// The dual function algebra of the two-parameter Heisenberg quantum group:
// a free algebra on the matrix entries {alpha, beta, g = e^gamma,
// gbar = e^{-gamma}, delta} reduced by a rewriting system, the defining
// 3x3 matrix T, the 9x9 R-matrix in the defining representation, and the
// RTT relation R T1 T2 = T2 T1 R together with the Hopf structure of T.
//
// Canonical word order: alpha^a beta^b g^c delta^e with c a signed power
// (g gbar = 1 applied eagerly).  The rewriting rules, on this alphabet:
//   beta  alpha = alpha beta - 2h alpha - w alpha^2
//   delta alpha = alpha delta - w alpha g
//   g     beta  = beta g + w alpha g
//   gbar  beta  = beta gbar - w alpha gbar
//   delta g     = g delta - w g^2 + w g
//   delta gbar  = gbar delta - w gbar + w
//   [beta, delta] = [alpha, g] = [alpha, gbar] = 0
// Every correction term carries a factor of h or w, so reduction
// terminates once coefficients pass the truncation order.

#include "qheis/report.hpp"
#include "qheis/series.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qheis {

enum class GroupGen { alpha, beta, g, gbar, delta };

struct GroupMono {
    int a = 0; // alpha power
    int b = 0; // beta power
    int c = 0; // signed g power (negative = gbar)
    int e = 0; // delta power
    friend auto operator<=>(const GroupMono &, const GroupMono &) = default;
    bool is_identity() const { return a == 0 && b == 0 && c == 0 && e == 0; }
    std::string str() const {
        if (is_identity())
            return "1";
        std::string s;
        auto app = [&](const char *n, int p) {
            if (p == 0)
                return;
            if (!s.empty())
                s += ' ';
            s += n;
            if (p > 1 || p < 0)
                s += "^" + std::to_string(p);
        };
        app("al", a);
        app("be", b);
        app("g", c);
        app("de", e);
        return s;
    }
};

class GroupElement {
  public:
    GroupElement() = default;
    explicit GroupElement(Truncation t) : trunc_(t) {}

    static GroupElement zero(Truncation t) { return GroupElement(t); }
    static GroupElement term(const GroupMono &m, const TruncatedSeries &c) {
        GroupElement x(c.truncation());
        x.add(m, c);
        return x;
    }
    static GroupElement one(Truncation t) {
        return term({}, TruncatedSeries::one(t));
    }

    const Truncation &truncation() const { return trunc_; }
    const std::map<GroupMono, TruncatedSeries> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const GroupMono &m, const TruncatedSeries &c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    friend GroupElement operator+(const GroupElement &x, const GroupElement &y) {
        GroupElement r = x;
        for (const auto &[m, c] : y.terms_)
            r.add(m, c);
        return r;
    }
    friend GroupElement operator-(const GroupElement &x, const GroupElement &y) {
        GroupElement r = x;
        for (const auto &[m, c] : y.terms_)
            r.add(m, -c);
        return r;
    }
    friend GroupElement operator-(const GroupElement &x) {
        GroupElement r(x.trunc_);
        for (const auto &[m, c] : x.terms_)
            r.add(m, -c);
        return r;
    }
    friend GroupElement operator*(const GroupElement &x, const TruncatedSeries &c) {
        GroupElement r(x.trunc_);
        for (const auto &[m, xc] : x.terms_)
            r.add(m, xc * c);
        return r;
    }
    friend GroupElement operator*(const GroupElement &x, const Rational &c) {
        GroupElement r(x.trunc_);
        for (const auto &[m, xc] : x.terms_)
            r.add(m, xc * c);
        return r;
    }
    GroupElement &operator+=(const GroupElement &y) { return *this = *this + y; }
    GroupElement &operator-=(const GroupElement &y) { return *this = *this - y; }
    friend bool operator==(const GroupElement &x, const GroupElement &y) {
        return x.terms_ == y.terms_;
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto &[m, c] : terms_) {
            if (!s.empty())
                s += " + ";
            s += "(" + c.str() + ") * " + m.str();
        }
        return s;
    }

  private:
    Truncation trunc_;
    std::map<GroupMono, TruncatedSeries> terms_;
};

/// Rewriting engine.  Each flag enables the correction terms coming from
/// one defining relation; disabling a flag removes that relation from the
/// system (used by the mutation coverage test).
struct GroupRelations {
    bool alpha_beta = true;  // [alpha, beta] = 2h alpha + w alpha^2
    bool alpha_delta = true; // [alpha, delta] = w alpha g
    bool beta_g = true;      // [beta, g] = -w alpha g
    bool g_delta = true;     // [g, delta] = w g (g - 1)
};

class GroupAlgebra {
  public:
    using Relations = GroupRelations;

    explicit GroupAlgebra(Truncation t, Relations rel = Relations()) : trunc_(t), rel_(rel) {}

    const Truncation &truncation() const { return trunc_; }

    GroupElement zero() const { return GroupElement::zero(trunc_); }
    GroupElement one() const { return GroupElement::one(trunc_); }
    GroupElement gen(GroupGen x) const {
        GroupMono m;
        switch (x) {
        case GroupGen::alpha: m.a = 1; break;
        case GroupGen::beta: m.b = 1; break;
        case GroupGen::g: m.c = 1; break;
        case GroupGen::gbar: m.c = -1; break;
        case GroupGen::delta: m.e = 1; break;
        }
        return GroupElement::term(m, TruncatedSeries::one(trunc_));
    }

    /// x * y with the product reduced to canonical form.
    GroupElement mul(const GroupElement &x, const GroupElement &y) const {
        if (!(x.truncation() == trunc_) || !(y.truncation() == trunc_))
            throw std::invalid_argument("GroupAlgebra::mul: truncation mismatch");
        GroupElement r(trunc_);
        for (const auto &[my, cy] : y.terms()) {
            GroupElement cur = x * cy;
            for (int i = 0; i < my.a; ++i)
                cur = mul_gen(cur, GroupGen::alpha);
            for (int i = 0; i < my.b; ++i)
                cur = mul_gen(cur, GroupGen::beta);
            for (int i = 0; i < (my.c > 0 ? my.c : -my.c); ++i)
                cur = mul_gen(cur, my.c > 0 ? GroupGen::g : GroupGen::gbar);
            for (int i = 0; i < my.e; ++i)
                cur = mul_gen(cur, GroupGen::delta);
            r += cur;
        }
        return r;
    }

    GroupElement commutator(const GroupElement &x, const GroupElement &y) const {
        return mul(x, y) - mul(y, x);
    }

    /// Reduces an explicit generator word, folding from the left.
    GroupElement word(const std::vector<GroupGen> &letters) const {
        GroupElement r = one();
        for (GroupGen x : letters)
            r = mul_gen(r, x);
        return r;
    }

    /// Same word folded from the right; used to probe confluence.
    GroupElement word_right_fold(const std::vector<GroupGen> &letters) const {
        GroupElement r = one();
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            r = mul(gen(*it), r);
        return r;
    }

    /// Counit: alpha, beta, delta -> 0; g, gbar -> 1.
    TruncatedSeries counit(const GroupElement &x) const {
        TruncatedSeries r(trunc_);
        for (const auto &[m, c] : x.terms())
            if (m.a == 0 && m.b == 0 && m.e == 0)
                r += c;
        return r;
    }

    /// Substitutes g = gbar = 1 (the gamma -> 0 reduction of the w = 0 limit).
    GroupElement drop_g(const GroupElement &x) const {
        GroupElement r(trunc_);
        for (const auto &[m, c] : x.terms())
            r.add(GroupMono{m.a, m.b, 0, m.e}, c);
        return r;
    }

    GroupElement x_right_mul(const GroupElement &x, GroupGen g) const {
        return mul_gen(x, g);
    }

  private:
    GroupElement mul_gen(const GroupElement &x, GroupGen g) const {
        GroupElement r(trunc_);
        for (const auto &[m, c] : x.terms())
            r += mono_gen(m, g) * c;
        return r;
    }

    // canonical monomial times one generator, reduced
    GroupElement mono_gen(const GroupMono &m, GroupGen g) const {
        const TruncatedSeries h = TruncatedSeries::h(trunc_);
        const TruncatedSeries w = TruncatedSeries::w(trunc_);
        const TruncatedSeries one1 = TruncatedSeries::one(trunc_);
        switch (g) {
        case GroupGen::delta:
            return GroupElement::term({m.a, m.b, m.c, m.e + 1}, one1);
        case GroupGen::g:
        case GroupGen::gbar: {
            const int sign = (g == GroupGen::g) ? 1 : -1;
            if (m.e == 0)
                return GroupElement::term({m.a, m.b, m.c + sign, 0}, one1);
            // push g (or gbar) left through one trailing delta
            const GroupMono head{m.a, m.b, m.c, m.e - 1};
            GroupElement hg = mono_gen(head, g); // head * g, reduced
            GroupElement r = mul_gen(hg, GroupGen::delta);
            if (rel_.g_delta) {
                if (sign > 0) {
                    // delta g = g delta - w g^2 + w g
                    r += mul_gen(hg, GroupGen::g) * (-w);
                    r += hg * w;
                } else {
                    // delta gbar = gbar delta - w gbar + w
                    r += hg * (-w);
                    r += GroupElement::term(head, w);
                }
            }
            return r;
        }
        case GroupGen::beta: {
            if (m.e > 0) {
                // [beta, delta] = 0
                const GroupMono head{m.a, m.b, m.c, 0};
                GroupElement r(trunc_);
                for (const auto &[hm, hc] : mono_gen(head, GroupGen::beta).terms())
                    r.add(GroupMono{hm.a, hm.b, hm.c, hm.e + m.e}, hc);
                return r;
            }
            if (m.c != 0) {
                const int sign = m.c > 0 ? 1 : -1;
                const GroupMono head{m.a, m.b, m.c - sign, 0};
                // g beta = beta g + w alpha g ; gbar beta = beta gbar - w alpha gbar
                GroupElement r = mono_gen_shift_g(mono_gen(head, GroupGen::beta), sign);
                if (rel_.beta_g) {
                    GroupElement corr =
                        mono_gen_shift_g(mono_gen(head, GroupGen::alpha), sign);
                    r += corr * (sign > 0 ? w : -w);
                }
                return r;
            }
            return GroupElement::term({m.a, m.b + 1, 0, 0}, one1);
        }
        case GroupGen::alpha:
        default: {
            if (m.e > 0) {
                // delta alpha = alpha delta - w alpha g
                const GroupMono head{m.a, m.b, m.c, m.e - 1};
                GroupElement ha = mono_gen(head, GroupGen::alpha);
                GroupElement r = mul_gen(ha, GroupGen::delta);
                if (rel_.alpha_delta)
                    r += mul_gen(ha, GroupGen::g) * (-w);
                return r;
            }
            if (m.c != 0) {
                // [alpha, g] = 0
                const GroupMono head{m.a, m.b, 0, 0};
                GroupElement r(trunc_);
                for (const auto &[hm, hc] : mono_gen(head, GroupGen::alpha).terms())
                    r.add(GroupMono{hm.a, hm.b, hm.c + m.c, hm.e}, hc);
                return r;
            }
            if (m.b > 0) {
                // beta alpha = alpha beta - 2h alpha - w alpha^2
                const GroupMono head{m.a, m.b - 1, 0, 0};
                GroupElement ha = mono_gen(head, GroupGen::alpha);
                GroupElement r = mul_gen(ha, GroupGen::beta);
                if (rel_.alpha_beta) {
                    r += ha * (h * Rational(-2));
                    r += mul_gen(ha, GroupGen::alpha) * (-w);
                }
                return r;
            }
            return GroupElement::term({m.a + 1, 0, 0, 0}, one1);
        }
        }
    }

    // multiplies every monomial's g-power by one step (x * g^sign with x
    // known to be free of trailing deltas in the relevant slots)
    GroupElement mono_gen_shift_g(const GroupElement &x, int sign) const {
        GroupElement r(trunc_);
        for (const auto &[m, c] : x.terms())
            r += mono_gen(m, sign > 0 ? GroupGen::g : GroupGen::gbar) * c;
        return r;
    }

    Truncation trunc_;
    Relations rel_;
};

// ---------------------------------------------------------------------------
// T matrix, 9x9 R-matrix, RTT residual
// ---------------------------------------------------------------------------

using TMatrix = std::array<std::array<GroupElement, 3>, 3>;

/// T = [[1, alpha, beta], [0, g, delta], [0, 0, 1]].
inline TMatrix t_matrix(const GroupAlgebra &alg) {
    const Truncation t = alg.truncation();
    TMatrix T{};
    for (auto &row : T)
        row.fill(GroupElement::zero(t));
    T[0][0] = alg.one();
    T[0][1] = alg.gen(GroupGen::alpha);
    T[0][2] = alg.gen(GroupGen::beta);
    T[1][1] = alg.gen(GroupGen::g);
    T[1][2] = alg.gen(GroupGen::delta);
    T[2][2] = alg.one();
    return T;
}

/// S(T) = T^{-1} = [[1, -gbar alpha, -beta + gbar alpha delta],
///                  [0, gbar, -gbar delta], [0, 0, 1]].
inline TMatrix t_matrix_inverse(const GroupAlgebra &alg) {
    const Truncation t = alg.truncation();
    TMatrix S{};
    for (auto &row : S)
        row.fill(GroupElement::zero(t));
    const GroupElement gbar = alg.gen(GroupGen::gbar);
    S[0][0] = alg.one();
    S[0][1] = -alg.mul(gbar, alg.gen(GroupGen::alpha));
    S[0][2] = -alg.gen(GroupGen::beta) +
              alg.mul(gbar, alg.mul(alg.gen(GroupGen::alpha), alg.gen(GroupGen::delta)));
    S[1][1] = gbar;
    S[1][2] = -alg.mul(gbar, alg.gen(GroupGen::delta));
    S[2][2] = alg.one();
    return S;
}

/// The 9x9 R-matrix of the defining representation, as exact scalars.
/// Block structure (3x3 blocks indexed by the first tensor factor):
///   [ I3   2h P(A+)   -2h P(N) ]
///   [ 0    I3+w P(A+) -w  P(N) ]
///   [ 0    0           I3      ]
/// with P the defining representation: P(A+) has a single 1 at (1,2) and
/// P(N) a single 1 at (1,1).
using R9Matrix = std::array<std::array<TruncatedSeries, 9>, 9>;

inline R9Matrix r9_matrix(Truncation t) {
    const TruncatedSeries h = TruncatedSeries::h(t);
    const TruncatedSeries w = TruncatedSeries::w(t);
    R9Matrix R{};
    for (auto &row : R)
        row.fill(TruncatedSeries(t));
    for (int i = 0; i < 9; ++i)
        R[i][i] = TruncatedSeries::one(t);
    // block (0,1) = 2h P(A+): entry (1,2) within the block
    R[0 * 3 + 1][1 * 3 + 2] = h * Rational(2);
    // block (0,2) = -2h P(N): entry (1,1)
    R[0 * 3 + 1][2 * 3 + 1] = h * Rational(-2);
    // block (1,1) += w P(A+)
    R[1 * 3 + 1][1 * 3 + 2] += w;
    // block (1,2) = -w P(N)
    R[1 * 3 + 1][2 * 3 + 1] = -w;
    return R;
}

/// Entrywise R T1 T2 - T2 T1 R, reduced to normal form.
inline std::array<std::array<GroupElement, 9>, 9> rtt_residual(const GroupAlgebra &alg,
                                                               const R9Matrix &R) {
    const Truncation t = alg.truncation();
    const TMatrix T = t_matrix(alg);
    auto T1 = [&](int I, int J) { // (T (x) I3)_{(i,j),(k,l)} = T_ik d_jl
        return (I % 3 == J % 3) ? T[I / 3][J / 3] : GroupElement::zero(t);
    };
    auto T2 = [&](int I, int J) { // (I3 (x) T)
        return (I / 3 == J / 3) ? T[I % 3][J % 3] : GroupElement::zero(t);
    };
    // T1T2 entries (both orders of the product agree entrywise only after
    // reduction; compute honestly)
    std::array<std::array<GroupElement, 9>, 9> T12{}, T21{}, res{};
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            GroupElement a(t), b(t);
            for (int k = 0; k < 9; ++k) {
                a += alg.mul(T1(i, k), T2(k, j));
                b += alg.mul(T2(i, k), T1(k, j));
            }
            T12[i][j] = a;
            T21[i][j] = b;
        }
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            GroupElement lhs(t), rhs(t);
            for (int k = 0; k < 9; ++k) {
                lhs += T12[k][j] * R[i][k];
                rhs += T21[i][k] * R[k][j];
            }
            res[i][j] = lhs - rhs;
        }
    return res;
}

inline CheckReport check_rtt(Truncation t,
                             GroupAlgebra::Relations rel = GroupAlgebra::Relations()) {
    return timed_check("rtt", "two-parameter", t, [&]() -> long long {
        GroupAlgebra alg(t, rel);
        const auto res = rtt_residual(alg, r9_matrix(t));
        long long n = 0;
        for (const auto &row : res)
            for (const auto &x : row)
                n += static_cast<long long>(x.terms().size());
        return n;
    });
}

// ---------------------------------------------------------------------------
// Hopf structure of the function algebra
// ---------------------------------------------------------------------------

/// Tensor square of the function algebra, with componentwise reduction.
class GroupTensor {
  public:
    using Key = std::pair<GroupMono, GroupMono>;

    GroupTensor() = default;
    explicit GroupTensor(Truncation t) : trunc_(t) {}

    static GroupTensor tensor(const GroupElement &x, const GroupElement &y) {
        GroupTensor r(x.truncation());
        for (const auto &[mx, cx] : x.terms())
            for (const auto &[my, cy] : y.terms())
                r.add({mx, my}, cx * cy);
        return r;
    }

    const std::map<Key, TruncatedSeries> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Key &k, const TruncatedSeries &c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    friend GroupTensor operator+(const GroupTensor &x, const GroupTensor &y) {
        GroupTensor r = x;
        for (const auto &[k, c] : y.terms_)
            r.add(k, c);
        return r;
    }
    friend GroupTensor operator-(const GroupTensor &x, const GroupTensor &y) {
        GroupTensor r = x;
        for (const auto &[k, c] : y.terms_)
            r.add(k, -c);
        return r;
    }
    friend bool operator==(const GroupTensor &x, const GroupTensor &y) {
        return x.terms_ == y.terms_;
    }

  private:
    Truncation trunc_;
    std::map<Key, TruncatedSeries> terms_;
};

inline GroupTensor group_tensor_mul(const GroupAlgebra &alg, const GroupTensor &x,
                                    const GroupTensor &y) {
    GroupTensor r(alg.truncation());
    for (const auto &[kx, cx] : x.terms())
        for (const auto &[ky, cy] : y.terms()) {
            const GroupElement s1 =
                alg.mul(GroupElement::term(kx.first, TruncatedSeries::one(alg.truncation())),
                        GroupElement::term(ky.first, cx * cy));
            const GroupElement s2 =
                alg.mul(GroupElement::term(kx.second, TruncatedSeries::one(alg.truncation())),
                        GroupElement::term(ky.second, TruncatedSeries::one(alg.truncation())));
            for (const auto &[m1, c1] : s1.terms())
                for (const auto &[m2, c2] : s2.terms())
                    r.add({m1, m2}, c1 * c2);
        }
    return r;
}

/// Coproduct on generators (the entries of T (x). T), extended to words.
inline GroupTensor group_coproduct(const GroupAlgebra &alg, const GroupElement &x) {
    const Truncation t = alg.truncation();
    const GroupElement one = alg.one();
    auto dgen = [&](GroupGen g) -> GroupTensor {
        switch (g) {
        case GroupGen::alpha:
            return GroupTensor::tensor(alg.gen(GroupGen::alpha), alg.gen(GroupGen::g)) +
                   GroupTensor::tensor(one, alg.gen(GroupGen::alpha));
        case GroupGen::beta:
            return GroupTensor::tensor(alg.gen(GroupGen::beta), one) +
                   GroupTensor::tensor(one, alg.gen(GroupGen::beta)) +
                   GroupTensor::tensor(alg.gen(GroupGen::alpha), alg.gen(GroupGen::delta));
        case GroupGen::g:
            return GroupTensor::tensor(alg.gen(GroupGen::g), alg.gen(GroupGen::g));
        case GroupGen::gbar:
            return GroupTensor::tensor(alg.gen(GroupGen::gbar), alg.gen(GroupGen::gbar));
        case GroupGen::delta:
        default:
            return GroupTensor::tensor(alg.gen(GroupGen::delta), one) +
                   GroupTensor::tensor(alg.gen(GroupGen::g), alg.gen(GroupGen::delta));
        }
    };
    GroupTensor r(t);
    for (const auto &[m, c] : x.terms()) {
        GroupTensor cur = GroupTensor::tensor(one * c, one);
        for (int i = 0; i < m.a; ++i)
            cur = group_tensor_mul(alg, cur, dgen(GroupGen::alpha));
        for (int i = 0; i < m.b; ++i)
            cur = group_tensor_mul(alg, cur, dgen(GroupGen::beta));
        for (int i = 0; i < (m.c > 0 ? m.c : -m.c); ++i)
            cur = group_tensor_mul(alg, cur, dgen(m.c > 0 ? GroupGen::g : GroupGen::gbar));
        for (int i = 0; i < m.e; ++i)
            cur = group_tensor_mul(alg, cur, dgen(GroupGen::delta));
        r = r + cur;
    }
    return r;
}

/// Coproducts/counits/antipodes of the matrix entries: Delta(T) = T (x). T,
/// eps(T) = 1, S(T) = T^{-1}; Delta and eps are algebra maps for the
/// defining relations, S is an anti-map, and T S(T) = S(T) T = 1.
inline CheckReport check_group_hopf(Truncation t) {
    return timed_check("group_hopf", "two-parameter", t, [&]() -> long long {
        GroupAlgebra alg(t);
        long long res = 0;
        const TMatrix T = t_matrix(alg);
        const TMatrix S = t_matrix_inverse(alg);

        // T S(T) = S(T) T = identity
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                GroupElement a(t), b(t);
                for (int k = 0; k < 3; ++k) {
                    a += alg.mul(T[i][k], S[k][j]);
                    b += alg.mul(S[i][k], T[k][j]);
                }
                const GroupElement expect = i == j ? alg.one() : alg.zero();
                res += static_cast<long long>((a - expect).terms().size());
                res += static_cast<long long>((b - expect).terms().size());
            }

        // Delta(T_ij) equals the (i,j) entry of T (x). T
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                GroupTensor dot(t);
                for (int k = 0; k < 3; ++k)
                    dot = dot + GroupTensor::tensor(T[i][k], T[k][j]);
                res += static_cast<long long>(
                    (group_coproduct(alg, T[i][j]) - dot).terms().size());
            }

        // eps(T) = identity matrix
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const TruncatedSeries e = alg.counit(T[i][j]);
                const TruncatedSeries expect =
                    i == j ? TruncatedSeries::one(t) : TruncatedSeries(t);
                if (!(e == expect))
                    ++res;
            }

        // Delta is an algebra map for the defining relations: check it on
        // all generator pairs (Delta(xy) = Delta(x)Delta(y))
        const std::vector<GroupGen> gens{GroupGen::alpha, GroupGen::beta, GroupGen::g,
                                         GroupGen::gbar, GroupGen::delta};
        for (GroupGen x : gens)
            for (GroupGen y : gens) {
                const GroupElement xy = alg.mul(alg.gen(x), alg.gen(y));
                const GroupTensor lhs = group_coproduct(alg, xy);
                const GroupTensor rhs = group_tensor_mul(
                    alg, group_coproduct(alg, alg.gen(x)), group_coproduct(alg, alg.gen(y)));
                res += static_cast<long long>((lhs - rhs).terms().size());
                if (!(alg.counit(xy) == alg.counit(alg.gen(x)) * alg.counit(alg.gen(y))))
                    ++res;
            }

        // S is an anti-homomorphism on generator pairs: S(xy) = S(y)S(x),
        // with S read off the entries of T^{-1}
        auto sgen = [&](GroupGen g) -> GroupElement {
            switch (g) {
            case GroupGen::alpha:
                return -alg.mul(alg.gen(GroupGen::gbar), alg.gen(GroupGen::alpha));
            case GroupGen::beta:
                return S[0][2];
            case GroupGen::g:
                return alg.gen(GroupGen::gbar);
            case GroupGen::gbar:
                return alg.gen(GroupGen::g);
            case GroupGen::delta:
            default:
                return -alg.mul(alg.gen(GroupGen::gbar), alg.gen(GroupGen::delta));
            }
        };
        auto antipode = [&](const GroupElement &x) {
            GroupElement r(t);
            for (const auto &[m, c] : x.terms()) {
                GroupElement cur = alg.one() * c;
                // reverse of alpha^a beta^b g^c delta^e
                for (int i = 0; i < m.e; ++i)
                    cur = alg.mul(cur, sgen(GroupGen::delta));
                for (int i = 0; i < (m.c > 0 ? m.c : -m.c); ++i)
                    cur = alg.mul(cur, sgen(m.c > 0 ? GroupGen::g : GroupGen::gbar));
                for (int i = 0; i < m.b; ++i)
                    cur = alg.mul(cur, sgen(GroupGen::beta));
                for (int i = 0; i < m.a; ++i)
                    cur = alg.mul(cur, sgen(GroupGen::alpha));
                r += cur;
            }
            return r;
        };
        for (GroupGen x : gens)
            for (GroupGen y : gens) {
                const GroupElement lhs = antipode(alg.mul(alg.gen(x), alg.gen(y)));
                const GroupElement rhs = alg.mul(sgen(y), sgen(x));
                res += static_cast<long long>((lhs - rhs).terms().size());
            }
        return res;
    });
}

/// One-parameter limits of the function algebra: the h = 0 relations keep
/// only the w corrections, and the w = 0 limit with g = 1 substituted
/// reproduces the undeformed coproducts except for the alpha (x) delta
/// term in Delta(beta).
inline CheckReport check_reductions(Truncation t) {
    return timed_check("group_reductions", "limits", t, [&]() -> long long {
        long long res = 0;
        {
            // h-limit: [alpha, beta] = w alpha^2, rest unchanged
            GroupAlgebra alg(Truncation{1, t.kw});
            const GroupElement al = alg.gen(GroupGen::alpha), be = alg.gen(GroupGen::beta);
            const GroupElement w_al2 =
                alg.mul(al, al) * TruncatedSeries::w(alg.truncation());
            res += static_cast<long long>((alg.commutator(al, be) - w_al2).terms().size());
        }
        {
            // w-limit with g -> 1: [alpha, beta] = 2h alpha,
            // [alpha, delta] = [beta, delta] = 0
            GroupAlgebra alg(Truncation{t.kh, 1});
            const GroupElement al = alg.gen(GroupGen::alpha), be = alg.gen(GroupGen::beta),
                               de = alg.gen(GroupGen::delta);
            const GroupElement two_h_al = al * (TruncatedSeries::h(alg.truncation()) * Rational(2));
            res += static_cast<long long>(
                (alg.drop_g(alg.commutator(al, be)) - alg.drop_g(two_h_al)).terms().size());
            res += static_cast<long long>(alg.drop_g(alg.commutator(al, de)).terms().size());
            res += static_cast<long long>(alg.drop_g(alg.commutator(be, de)).terms().size());

            // coproducts with g -> 1 in both slots: alpha and delta become
            // primitive, Delta(beta) keeps the alpha (x) delta term
            auto drop2 = [&](const GroupTensor &x) {
                GroupTensor r(alg.truncation());
                for (const auto &[k, c] : x.terms())
                    r.add({GroupMono{k.first.a, k.first.b, 0, k.first.e},
                           GroupMono{k.second.a, k.second.b, 0, k.second.e}},
                          c);
                return r;
            };
            const GroupElement one = alg.one();
            res += static_cast<long long>(
                (drop2(group_coproduct(alg, al)) -
                 (GroupTensor::tensor(al, one) + GroupTensor::tensor(one, al)))
                    .terms()
                    .size());
            res += static_cast<long long>(
                (drop2(group_coproduct(alg, de)) -
                 (GroupTensor::tensor(de, one) + GroupTensor::tensor(one, de)))
                    .terms()
                    .size());
            res += static_cast<long long>(
                (drop2(group_coproduct(alg, be)) -
                 (GroupTensor::tensor(be, one) + GroupTensor::tensor(one, be) +
                  GroupTensor::tensor(al, de)))
                    .terms()
                    .size());
        }
        return res;
    });
}

} // namespace qheis
