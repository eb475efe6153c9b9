#ifndef QHEIS_PBW_HPP
#define QHEIS_PBW_HPP

#include "qheis/series.hpp"

#include <array>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace qheis {

/// Ordered monomial E^i (A+)^j N^k A^l.
struct PBWMonomial {
    int i = 0, j = 0, k = 0, l = 0;
    friend auto operator<=>(const PBWMonomial &, const PBWMonomial &) = default;
    bool is_identity() const { return i == 0 && j == 0 && k == 0 && l == 0; }
    int degree() const { return i + j + k + l; }
    std::string str() const {
        if (is_identity())
            return "1";
        std::string s;
        auto app = [&](const char *g, int p) {
            if (p == 0)
                return;
            if (!s.empty())
                s += ' ';
            s += g;
            if (p > 1)
                s += "^" + std::to_string(p);
        };
        app("E", i);
        app("Ap", j);
        app("N", k);
        app("A", l);
        return s;
    }
};

enum class Gen { E, Ap, N, A };

/// Element of U(H(4))-type algebras on the PBW basis with truncated-series
/// coefficients. Canonical: no zero coefficients stored.
class PBWElement {
  public:
    explicit PBWElement(Truncation t = {}) : trunc_(t) {}

    static PBWElement zero(Truncation t) { return PBWElement(t); }
    static PBWElement term(PBWMonomial m, TruncatedSeries c) {
        PBWElement e(c.truncation());
        e.add(m, c);
        return e;
    }
    static PBWElement unit(Truncation t) {
        return term({}, TruncatedSeries::one(t));
    }

    const Truncation &truncation() const { return trunc_; }
    const std::map<PBWMonomial, TruncatedSeries> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const PBWMonomial &m, const TruncatedSeries &c) {
        require_same(trunc_, c.truncation());
        if (c.is_zero())
            return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    TruncatedSeries coeff(const PBWMonomial &m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? TruncatedSeries(trunc_) : it->second;
    }

    friend PBWElement operator+(const PBWElement &x, const PBWElement &y) {
        require_same(x.trunc_, y.trunc_);
        PBWElement r = x;
        for (const auto &[m, c] : y.terms_)
            r.add(m, c);
        return r;
    }
    friend PBWElement operator-(const PBWElement &x, const PBWElement &y) {
        require_same(x.trunc_, y.trunc_);
        PBWElement r = x;
        for (const auto &[m, c] : y.terms_)
            r.add(m, -c);
        return r;
    }
    friend PBWElement operator-(const PBWElement &x) {
        PBWElement r(x.trunc_);
        for (const auto &[m, c] : x.terms_)
            r.terms_.emplace(m, -c);
        return r;
    }
    friend PBWElement operator*(const PBWElement &x, const TruncatedSeries &c) {
        PBWElement r(x.trunc_);
        for (const auto &[m, v] : x.terms_)
            r.add(m, v * c);
        return r;
    }
    friend PBWElement operator*(const TruncatedSeries &c, const PBWElement &x) { return x * c; }
    friend PBWElement operator*(const PBWElement &x, const Rational &c) {
        PBWElement r(x.trunc_);
        for (const auto &[m, v] : x.terms_)
            r.add(m, v * c);
        return r;
    }
    PBWElement &operator+=(const PBWElement &y) { return *this = *this + y; }
    PBWElement &operator-=(const PBWElement &y) { return *this = *this - y; }

    friend bool operator==(const PBWElement &x, const PBWElement &y) {
        return x.trunc_ == y.trunc_ && x.terms_ == y.terms_;
    }

    /// Multiplies every monomial by E^p (E is central in every preset).
    PBWElement shift_E(int p) const {
        PBWElement r(trunc_);
        for (const auto &[m, c] : terms_)
            r.terms_.emplace(PBWMonomial{m.i + p, m.j, m.k, m.l}, c);
        return r;
    }

    /// True when every term carries at least one power of h or w.
    bool is_param_positive() const {
        for (const auto &[m, c] : terms_)
            if (!c.is_param_positive())
                return false;
        return true;
    }

    PBWElement retruncate(Truncation t) const {
        PBWElement r(t);
        for (const auto &[m, c] : terms_)
            r.add(m, c.truncate(t));
        return r;
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto &[m, c] : terms_) {
            if (!first)
                os << " + ";
            first = false;
            os << "(" << c.str() << ") * " << m.str();
        }
        return os.str();
    }

  private:
    std::map<PBWMonomial, TruncatedSeries> terms_;
    Truncation trunc_;
};

/// Element of the 2- or 3-fold tensor power, keyed by monomial tuples.
class TensorElement {
  public:
    using Key = std::vector<PBWMonomial>;

    TensorElement(int arity, Truncation t) : arity_(arity), trunc_(t) {
        if (arity != 2 && arity != 3)
            throw std::invalid_argument("tensor arity must be 2 or 3");
    }
    static TensorElement unit(int arity, Truncation t) {
        TensorElement e(arity, t);
        e.add(Key(arity), TruncatedSeries::one(t));
        return e;
    }

    int arity() const { return arity_; }
    const Truncation &truncation() const { return trunc_; }
    const std::map<Key, TruncatedSeries> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const Key &m, const TruncatedSeries &c) {
        if (static_cast<int>(m.size()) != arity_)
            throw std::invalid_argument("tensor key arity mismatch");
        require_same(trunc_, c.truncation());
        if (c.is_zero())
            return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    friend TensorElement operator+(const TensorElement &x, const TensorElement &y) {
        x.check_compat(y);
        TensorElement r = x;
        for (const auto &[m, c] : y.terms_)
            r.add(m, c);
        return r;
    }
    friend TensorElement operator-(const TensorElement &x, const TensorElement &y) {
        x.check_compat(y);
        TensorElement r = x;
        for (const auto &[m, c] : y.terms_)
            r.add(m, -c);
        return r;
    }
    friend TensorElement operator*(const TensorElement &x, const TruncatedSeries &c) {
        TensorElement r(x.arity_, x.trunc_);
        for (const auto &[m, v] : x.terms_)
            r.add(m, v * c);
        return r;
    }
    friend TensorElement operator*(const TensorElement &x, const Rational &c) {
        TensorElement r(x.arity_, x.trunc_);
        for (const auto &[m, v] : x.terms_)
            r.add(m, v * c);
        return r;
    }
    friend TensorElement operator-(const TensorElement &x) {
        TensorElement r(x.arity_, x.trunc_);
        for (const auto &[m, c] : x.terms_)
            r.add(m, -c);
        return r;
    }
    TensorElement &operator+=(const TensorElement &y) { return *this = *this + y; }
    TensorElement &operator-=(const TensorElement &y) { return *this = *this - y; }

    friend bool operator==(const TensorElement &x, const TensorElement &y) {
        return x.arity_ == y.arity_ && x.trunc_ == y.trunc_ && x.terms_ == y.terms_;
    }

    bool is_param_positive() const {
        for (const auto &[m, c] : terms_)
            if (!c.is_param_positive())
                return false;
        return true;
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto &[m, c] : terms_) {
            if (!first)
                os << " + ";
            first = false;
            os << "(" << c.str() << ") * ";
            for (std::size_t s = 0; s < m.size(); ++s)
                os << (s ? " (x) " : "") << m[s].str();
        }
        return os.str();
    }

  private:
    void check_compat(const TensorElement &y) const {
        if (arity_ != y.arity_)
            throw std::invalid_argument("tensor arity mismatch");
        require_same(trunc_, y.trunc_);
    }
    int arity_;
    std::map<Key, TruncatedSeries> terms_;
    Truncation trunc_;
};

enum class Preset { standard_h, nonstandard_w, two_parameter };

inline const char *preset_name(Preset p) {
    switch (p) {
    case Preset::standard_h: return "standard-h";
    case Preset::nonstandard_w: return "nonstandard-w";
    default: return "two-parameter";
    }
}

/// The algebra U_.(H(4)) for one preset of defining relations, with
/// normal-ordering multiplication, Hopf maps and tensor operations.
/// Holds the rewriting caches; treat instances as per-thread workspaces.
class Algebra {
  public:
    Algebra(Preset p, Truncation t) : preset_(p), trunc_(t) {
        build_brackets();
    }

    Preset preset() const { return preset_; }
    const Truncation &truncation() const { return trunc_; }

    PBWElement zero() const { return PBWElement::zero(trunc_); }
    PBWElement one() const { return PBWElement::unit(trunc_); }
    PBWElement gen(Gen g) const {
        PBWMonomial m;
        switch (g) {
        case Gen::E: m.i = 1; break;
        case Gen::Ap: m.j = 1; break;
        case Gen::N: m.k = 1; break;
        case Gen::A: m.l = 1; break;
        }
        return PBWElement::term(m, TruncatedSeries::one(trunc_));
    }
    TruncatedSeries h_scalar() const { return TruncatedSeries::h(trunc_); }
    TruncatedSeries w_scalar() const { return TruncatedSeries::w(trunc_); }

    // ---- multiplication ----

    PBWElement mul(const PBWElement &x, const PBWElement &y) {
        require_same(x.truncation(), trunc_);
        require_same(y.truncation(), trunc_);
        PBWElement r(trunc_);
        for (const auto &[mx, cx] : x.terms())
            for (const auto &[my, cy] : y.terms()) {
                TruncatedSeries c = cx * cy;
                if (c.is_zero())
                    continue;
                const PBWElement &p = mono_mul(mx, my);
                for (const auto &[m, cm] : p.terms())
                    r.add(m, cm * c);
            }
        return r;
    }

    PBWElement pow(const PBWElement &x, int n) {
        PBWElement r = one();
        for (int q = 0; q < n; ++q)
            r = mul(r, x);
        return r;
    }

    PBWElement commutator(const PBWElement &x, const PBWElement &y) {
        return mul(x, y) - mul(y, x);
    }

    /// exp of a truncation-nilpotent element (every term carries h or w).
    PBWElement exp(const PBWElement &x) {
        if (!x.is_param_positive())
            throw std::invalid_argument("exp: argument is not truncation-nilpotent");
        PBWElement r = one(), p = one();
        Rational fact = 1;
        for (int n = 1; !p.is_zero(); ++n) {
            p = mul(p, x);
            fact *= n;
            if (p.is_zero())
                break;
            r += p * Rational(1 / fact);
        }
        return r;
    }

    /// log(1 + y) for truncation-nilpotent y, given x = 1 + y.
    PBWElement log(const PBWElement &x) {
        PBWElement y = x - one();
        if (!y.is_param_positive())
            throw std::invalid_argument("log: argument is not of the form 1 + nilpotent");
        PBWElement r = zero(), p = one();
        for (int m = 1; ; ++m) {
            p = mul(p, y);
            if (p.is_zero())
                break;
            r += p * Rational(Rational(m % 2 ? 1 : -1) / m);
        }
        return r;
    }

    /// Order-by-order inverse of c0*(1 + nilpotent).
    PBWElement inverse(const PBWElement &x) {
        Rational c0 = x.coeff(PBWMonomial{}).coeff(0, 0);
        if (c0 == 0)
            throw std::invalid_argument("inverse: constant term is zero");
        PBWElement y = one() - x * Rational(1 / c0);
        if (!y.is_param_positive())
            throw std::invalid_argument("inverse: element is not 1 + nilpotent up to scale");
        PBWElement r = one(), p = one();
        while (true) {
            p = mul(p, y);
            if (p.is_zero())
                break;
            r += p;
        }
        return r * Rational(1 / c0);
    }

    // ---- tensor operations ----

    TensorElement tensor(const PBWElement &x, const PBWElement &y) {
        TensorElement r(2, trunc_);
        for (const auto &[mx, cx] : x.terms())
            for (const auto &[my, cy] : y.terms())
                r.add({mx, my}, cx * cy);
        return r;
    }

    TensorElement tensor(const PBWElement &x, const PBWElement &y, const PBWElement &z) {
        TensorElement r(3, trunc_);
        for (const auto &[mx, cx] : x.terms())
            for (const auto &[my, cy] : y.terms())
                for (const auto &[mz, cz] : z.terms())
                    r.add({mx, my, mz}, cx * cy * cz);
        return r;
    }

    TensorElement tensor_mul(const TensorElement &x, const TensorElement &y) {
        if (x.arity() != y.arity())
            throw std::invalid_argument("tensor_mul: arity mismatch");
        TensorElement r(x.arity(), trunc_);
        for (const auto &[mx, cx] : x.terms())
            for (const auto &[my, cy] : y.terms()) {
                TruncatedSeries c = cx * cy;
                if (c.is_zero())
                    continue;
                // slotwise product; distribute over each slot's PBW expansion
                std::vector<std::pair<TensorElement::Key, TruncatedSeries>> acc{
                    {TensorElement::Key(x.arity()), c}};
                for (int s = 0; s < x.arity() && !acc.empty(); ++s) {
                    const PBWElement &p = mono_mul(mx[s], my[s]);
                    std::vector<std::pair<TensorElement::Key, TruncatedSeries>> nxt;
                    for (const auto &[key, cc] : acc)
                        for (const auto &[m, cm] : p.terms()) {
                            TruncatedSeries c2 = cc * cm;
                            if (c2.is_zero())
                                continue;
                            TensorElement::Key k2 = key;
                            k2[s] = m;
                            nxt.emplace_back(std::move(k2), std::move(c2));
                        }
                    acc = std::move(nxt);
                }
                for (auto &[key, cc] : acc)
                    r.add(key, cc);
            }
        return r;
    }

    TensorElement tensor_pow_mul(const TensorElement &x, int n) {
        TensorElement r = TensorElement::unit(x.arity(), trunc_);
        for (int q = 0; q < n; ++q)
            r = tensor_mul(r, x);
        return r;
    }

    TensorElement tensor_exp(const TensorElement &x) {
        if (!x.is_param_positive())
            throw std::invalid_argument("tensor_exp: argument is not truncation-nilpotent");
        TensorElement r = TensorElement::unit(x.arity(), trunc_), p = r;
        Rational fact = 1;
        for (int n = 1; !p.is_zero(); ++n) {
            p = tensor_mul(p, x);
            fact *= n;
            if (p.is_zero())
                break;
            r += p * Rational(1 / fact);
        }
        return r;
    }

    TensorElement tensor_inverse(const TensorElement &x) {
        TensorElement y = TensorElement::unit(x.arity(), trunc_) - x;
        if (!y.is_param_positive())
            throw std::invalid_argument("tensor_inverse: element is not 1 + nilpotent");
        TensorElement r = TensorElement::unit(x.arity(), trunc_), p = r;
        while (true) {
            p = tensor_mul(p, y);
            if (p.is_zero())
                break;
            r += p;
        }
        return r;
    }

    /// Places an arity-2 element into slots {12, 13, 23} of the tensor cube.
    TensorElement embed(const TensorElement &x, int slots) const {
        if (x.arity() != 2)
            throw std::invalid_argument("embed: arity-2 input required");
        int s0, s1;
        switch (slots) {
        case 12: s0 = 0; s1 = 1; break;
        case 13: s0 = 0; s1 = 2; break;
        case 23: s0 = 1; s1 = 2; break;
        default: throw std::invalid_argument("embed: slots must be 12, 13 or 23");
        }
        TensorElement r(3, trunc_);
        for (const auto &[m, c] : x.terms()) {
            TensorElement::Key k(3);
            k[s0] = m[0];
            k[s1] = m[1];
            r.add(k, c);
        }
        return r;
    }

    TensorElement flip(const TensorElement &x) const {
        if (x.arity() != 2)
            throw std::invalid_argument("flip: arity-2 input required");
        TensorElement r(2, trunc_);
        for (const auto &[m, c] : x.terms())
            r.add({m[1], m[0]}, c);
        return r;
    }

    /// Applies a monomial -> PBWElement map to one tensor slot.
    template <class F>
    TensorElement slot_map(const TensorElement &x, int slot, F &&f) {
        TensorElement r(x.arity(), trunc_);
        for (const auto &[m, c] : x.terms()) {
            const PBWElement img = f(m[slot]);
            for (const auto &[mm, cc] : img.terms()) {
                TensorElement::Key k = m;
                k[slot] = mm;
                r.add(k, c * cc);
            }
        }
        return r;
    }

    /// m applied to an arity-2 element: multiplies the two slots together.
    PBWElement mul_slots(const TensorElement &x) {
        if (x.arity() != 2)
            throw std::invalid_argument("mul_slots: arity-2 input required");
        PBWElement r(trunc_);
        for (const auto &[m, c] : x.terms()) {
            const PBWElement &p = mono_mul(m[0], m[1]);
            for (const auto &[mm, cc] : p.terms())
                r.add(mm, cc * c);
        }
        return r;
    }

    /// epsilon applied to one slot (keeps terms with the identity there).
    TensorElement counit_slot3(const TensorElement &x, int slot) const {
        if (x.arity() != 3)
            throw std::invalid_argument("counit_slot3: arity-3 input required");
        TensorElement r(2, trunc_);
        for (const auto &[m, c] : x.terms()) {
            if (!m[slot].is_identity())
                continue;
            TensorElement::Key k;
            for (int s = 0; s < 3; ++s)
                if (s != slot)
                    k.push_back(m[s]);
            r.add(k, c);
        }
        return r;
    }
    PBWElement counit_slot2(const TensorElement &x, int slot) const {
        if (x.arity() != 2)
            throw std::invalid_argument("counit_slot2: arity-2 input required");
        PBWElement r(trunc_);
        for (const auto &[m, c] : x.terms())
            if (m[slot].is_identity())
                r.add(m[1 - slot], c);
        return r;
    }

    // ---- Hopf maps (native to the preset) ----

    TensorElement coproduct(const PBWElement &x) {
        TensorElement r(2, trunc_);
        for (const auto &[m, c] : x.terms())
            r += mono_coproduct(m) * c;
        return r;
    }

    PBWElement antipode(const PBWElement &x) {
        PBWElement r(trunc_);
        for (const auto &[m, c] : x.terms())
            r += mono_antipode(m) * c;
        return r;
    }

    TruncatedSeries counit(const PBWElement &x) const {
        return x.coeff(PBWMonomial{});
    }

    /// (Delta (x) id) and (id (x) Delta) on arity-2 elements.
    TensorElement coproduct_slot(const TensorElement &x, int slot) {
        if (x.arity() != 2)
            throw std::invalid_argument("coproduct_slot: arity-2 input required");
        TensorElement r(3, trunc_);
        for (const auto &[m, c] : x.terms()) {
            const TensorElement d = mono_coproduct(m[slot]);
            for (const auto &[dm, dc] : d.terms()) {
                TensorElement::Key k(3);
                if (slot == 0) {
                    k[0] = dm[0];
                    k[1] = dm[1];
                    k[2] = m[1];
                } else {
                    k[0] = m[0];
                    k[1] = dm[0];
                    k[2] = dm[1];
                }
                r.add(k, c * dc);
            }
        }
        return r;
    }

    // ---- named series elements ----

    /// sinh(hE)/h as a PBW element (series in h with odd E powers).
    PBWElement sinh_hE_over_h() const {
        PBWElement r(trunc_);
        Rational fact = 1;
        for (int n = 0; 2 * n < trunc_.kh; ++n) {
            if (n > 0)
                fact *= (2 * n) * (2 * n + 1);
            r.add(PBWMonomial{2 * n + 1, 0, 0, 0},
                  TruncatedSeries::monomial(1 / fact, 2 * n, 0, trunc_));
        }
        return r;
    }

    /// exp(c * h * E) for rational c.
    PBWElement exp_hE(const Rational &c) {
        PBWElement x = gen(Gen::E) * TruncatedSeries::monomial(c, 1, 0, trunc_);
        return exp(x);
    }

    /// exp(c * w * A+) for rational c.
    PBWElement exp_wAp(const Rational &c) {
        PBWElement x = gen(Gen::Ap) * TruncatedSeries::monomial(c, 0, 1, trunc_);
        return exp(x);
    }

    /// (exp(c w A+) - 1) / w = sum_m c^{m+1} w^m Ap^{m+1} / (m+1)!.
    PBWElement expm1_wAp_over_w(const Rational &c) const {
        PBWElement r(trunc_);
        Rational fact = 1, cp = c;
        for (int m = 0; m < trunc_.kw; ++m) {
            fact *= m + 1;
            r.add(PBWMonomial{0, m + 1, 0, 0},
                  TruncatedSeries::monomial(cp / fact, 0, m, trunc_));
            cp *= c;
        }
        return r;
    }

    /// (1 - exp(-w A+)) / w, the replacement generator B of the h-structure
    /// inside the two-parameter algebra.
    PBWElement b_series() const { return -expm1_wAp_over_w(-1); }

    /// sinh(p * x) / p for p in {h, w}; the explicit parameter powers bound
    /// the sum, so x need not be truncation-nilpotent.
    PBWElement sinh_over(const PBWElement &x, Param p) {
        const int bound = p == Param::h ? trunc_.kh : trunc_.kw;
        const TruncatedSeries ps =
            TruncatedSeries::monomial(1, p == Param::h ? 1 : 0, p == Param::h ? 0 : 1, trunc_);
        const PBWElement x2 = mul(x, x);
        PBWElement r = zero(), xp = x;
        TruncatedSeries pw = TruncatedSeries::one(trunc_);
        Rational fact = 1;
        for (int n = 0; 2 * n < bound; ++n) {
            if (n > 0) {
                xp = mul(xp, x2);
                fact *= (2 * n) * (2 * n + 1);
                pw = pw * ps * ps;
            }
            r += xp * (pw * (1 / fact));
        }
        return r;
    }

    /// (exp(p * x) - 1) / p for p in {h, w}.
    PBWElement expm1_over(const PBWElement &x, Param p) {
        const int bound = p == Param::h ? trunc_.kh : trunc_.kw;
        const TruncatedSeries ps =
            TruncatedSeries::monomial(1, p == Param::h ? 1 : 0, p == Param::h ? 0 : 1, trunc_);
        PBWElement r = zero(), xp = x;
        TruncatedSeries pw = TruncatedSeries::one(trunc_);
        Rational fact = 1;
        for (int n = 0; n < bound; ++n) {
            if (n > 0) {
                xp = mul(xp, x);
                fact *= n + 1;
                pw = pw * ps;
            }
            r += xp * (pw * (1 / fact));
        }
        return r;
    }

    // ---- caches / defining relations ----

    /// Normal-ordered product of two PBW monomials (cached).
    const PBWElement &mono_mul(const PBWMonomial &x, const PBWMonomial &y) {
        const auto key = std::pair(x, y);
        auto it = mono_cache_.find(key);
        if (it != mono_cache_.end())
            return it->second;
        Word w;
        w.append(static_cast<std::size_t>(x.j), 'p');
        w.append(static_cast<std::size_t>(x.k), 'n');
        w.append(static_cast<std::size_t>(x.l), 'a');
        w.append(static_cast<std::size_t>(y.j), 'p');
        w.append(static_cast<std::size_t>(y.k), 'n');
        w.append(static_cast<std::size_t>(y.l), 'a');
        PBWElement r = normal_order_word(w).shift_E(x.i + y.i);
        return mono_cache_.emplace(key, std::move(r)).first->second;
    }

  private:
    using Word = std::string; // letters 'p' (A+), 'n' (N), 'a' (A)

    static int rank(char c) { return c == 'p' ? 0 : c == 'n' ? 1 : 2; }

    /// Defining commutators, normal-ordered, per preset.
    void build_brackets() {
        const auto one_s = TruncatedSeries::one(trunc_);
        // [A, A+]
        br_a_ap_ = PBWElement(trunc_);
        switch (preset_) {
        case Preset::standard_h:
            br_a_ap_ = sinh_hE_over_h();
            break;
        case Preset::nonstandard_w: {
            // E * e^{w A+}
            PBWElement e = gen(Gen::E);
            PBWElement x(trunc_);
            Rational fact = 1;
            for (int m = 0; m < trunc_.kw; ++m) {
                if (m > 0)
                    fact *= m;
                x.add(PBWMonomial{1, m, 0, 0},
                      TruncatedSeries::monomial(1 / fact, 0, m, trunc_));
            }
            br_a_ap_ = x;
            break;
        }
        case Preset::two_parameter: {
            // sinh(hE)/h * e^{w A+}: product of commuting E- and A+-series
            const PBWElement s = sinh_hE_over_h();
            Rational fact = 1;
            for (int m = 0; m < trunc_.kw; ++m) {
                if (m > 0)
                    fact *= m;
                const TruncatedSeries wm =
                    TruncatedSeries::monomial(1 / fact, 0, m, trunc_);
                for (const auto &[sm, sc] : s.terms())
                    br_a_ap_.add(PBWMonomial{sm.i, m, 0, 0}, sc * wm);
            }
            break;
        }
        }
        // [N, A+]
        switch (preset_) {
        case Preset::standard_h:
            br_n_ap_ = gen(Gen::Ap);
            break;
        default:
            br_n_ap_ = expm1_wAp_over_w(1);
            break;
        }
        // [A, N] = A  (from [N, A] = -A)
        br_a_n_ = gen(Gen::A);
        (void)one_s;
    }

    const PBWElement &bracket(char x, char y) const {
        // x appears left of y with rank(x) > rank(y)
        if (x == 'a' && y == 'p')
            return br_a_ap_;
        if (x == 'n' && y == 'p')
            return br_n_ap_;
        return br_a_n_; // x == 'a', y == 'n'
    }

    const PBWElement &normal_order_word(const Word &w) {
        auto it = word_cache_.find(w);
        if (it != word_cache_.end())
            return it->second;
        PBWElement r(trunc_);
        std::size_t p = 0;
        bool sorted = true;
        for (; p + 1 < w.size(); ++p)
            if (rank(w[p]) > rank(w[p + 1])) {
                sorted = false;
                break;
            }
        if (sorted) {
            PBWMonomial m;
            for (char c : w)
                (c == 'p' ? m.j : c == 'n' ? m.k : m.l)++;
            r.add(m, TruncatedSeries::one(trunc_));
        } else {
            Word swapped = w;
            std::swap(swapped[p], swapped[p + 1]);
            r = normal_order_word(swapped);
            const PBWElement br = bracket(w[p], w[p + 1]); // copy: recursion may rehash
            for (const auto &[bm, bc] : br.terms()) {
                Word spliced = w.substr(0, p);
                spliced.append(static_cast<std::size_t>(bm.j), 'p');
                spliced.append(static_cast<std::size_t>(bm.k), 'n');
                spliced.append(static_cast<std::size_t>(bm.l), 'a');
                spliced.append(w, p + 2);
                r += normal_order_word(spliced).shift_E(bm.i) * bc;
            }
        }
        return word_cache_.emplace(w, std::move(r)).first->second;
    }

    TensorElement mono_coproduct(const PBWMonomial &m) {
        auto it = cop_cache_.find(m);
        if (it != cop_cache_.end())
            return it->second;
        TensorElement r = TensorElement::unit(2, trunc_);
        for (int q = 0; q < m.i; ++q)
            r = tensor_mul(r, gen_coproduct(Gen::E));
        for (int q = 0; q < m.j; ++q)
            r = tensor_mul(r, gen_coproduct(Gen::Ap));
        for (int q = 0; q < m.k; ++q)
            r = tensor_mul(r, gen_coproduct(Gen::N));
        for (int q = 0; q < m.l; ++q)
            r = tensor_mul(r, gen_coproduct(Gen::A));
        return cop_cache_.emplace(m, std::move(r)).first->second;
    }

    PBWElement mono_antipode(const PBWMonomial &m) {
        auto it = anti_cache_.find(m);
        if (it != anti_cache_.end())
            return it->second;
        // anti-homomorphism: reverse the letters
        PBWElement r = one();
        for (int q = 0; q < m.l; ++q)
            r = mul(r, gen_antipode(Gen::A));
        for (int q = 0; q < m.k; ++q)
            r = mul(r, gen_antipode(Gen::N));
        for (int q = 0; q < m.j; ++q)
            r = mul(r, gen_antipode(Gen::Ap));
        if (m.i % 2)
            r = -r;
        r = r.shift_E(m.i);
        return anti_cache_.emplace(m, std::move(r)).first->second;
    }

  public:
    TensorElement gen_coproduct(Gen g) {
        const PBWElement one_e = one();
        switch (g) {
        case Gen::E:
            return tensor(gen(Gen::E), one_e) + tensor(one_e, gen(Gen::E));
        case Gen::Ap:
            return tensor(gen(Gen::Ap), one_e) + tensor(one_e, gen(Gen::Ap));
        case Gen::N:
            if (preset_ == Preset::standard_h)
                return tensor(gen(Gen::N), one_e) + tensor(one_e, gen(Gen::N));
            return tensor(gen(Gen::N), exp_wAp(1)) + tensor(one_e, gen(Gen::N));
        case Gen::A:
            switch (preset_) {
            case Preset::standard_h:
                return tensor(gen(Gen::A), exp_hE(1)) + tensor(exp_hE(-1), gen(Gen::A));
            case Preset::nonstandard_w:
                return tensor(gen(Gen::A), exp_wAp(1)) + tensor(one_e, gen(Gen::A)) +
                       tensor(gen(Gen::N) * w_scalar(),
                              mul(gen(Gen::E), exp_wAp(1)));
            default:
                return tensor(gen(Gen::A), mul(exp_hE(1), exp_wAp(1))) +
                       tensor(exp_hE(-1), gen(Gen::A)) +
                       tensor(mul(exp_hE(-1), gen(Gen::N)) * w_scalar(),
                              mul(sinh_hE_over_h(), exp_wAp(1)));
            }
        }
        throw std::logic_error("unreachable");
    }

    PBWElement gen_antipode(Gen g) {
        switch (g) {
        case Gen::E:
            return -gen(Gen::E);
        case Gen::Ap:
            return -gen(Gen::Ap);
        case Gen::N:
            if (preset_ == Preset::standard_h)
                return -gen(Gen::N);
            return -mul(gen(Gen::N), exp_wAp(-1));
        case Gen::A:
            switch (preset_) {
            case Preset::standard_h:
                return -gen(Gen::A);
            case Preset::nonstandard_w:
                return -mul(gen(Gen::A), exp_wAp(-1)) +
                       mul(mul(gen(Gen::N), gen(Gen::E)), exp_wAp(-1)) * w_scalar();
            default:
                return -mul(gen(Gen::A), exp_wAp(-1)) +
                       mul(gen(Gen::N), mul(sinh_hE_over_h(), exp_wAp(-1))) * w_scalar();
            }
        }
        throw std::logic_error("unreachable");
    }

  private:
    Preset preset_;
    Truncation trunc_;
    PBWElement br_a_ap_{Truncation{}}, br_n_ap_{Truncation{}}, br_a_n_{Truncation{}};

    struct MonoPairHash {
        std::size_t operator()(const std::pair<PBWMonomial, PBWMonomial> &p) const {
            auto mix = [](std::size_t s, int v) {
                return s * 1000003u + static_cast<std::size_t>(v + 7);
            };
            std::size_t s = 0;
            for (const auto &m : {p.first, p.second}) {
                s = mix(s, m.i);
                s = mix(s, m.j);
                s = mix(s, m.k);
                s = mix(s, m.l);
            }
            return s;
        }
    };
    std::unordered_map<std::pair<PBWMonomial, PBWMonomial>, PBWElement, MonoPairHash> mono_cache_;
    std::unordered_map<Word, PBWElement> word_cache_;
    std::map<PBWMonomial, TensorElement> cop_cache_;
    std::map<PBWMonomial, PBWElement> anti_cache_;
};

} // namespace qheis

#endif
