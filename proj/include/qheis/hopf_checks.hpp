#pragma once

// Exact verification of the Hopf / quasitriangular / twist / ribbon
// identities of the deformed Heisenberg algebras, at a fixed truncation.
// Every check reduces a residual to canonical form and reports its term
// count; pass means exactly zero in rational arithmetic.

#include "qheis/pbw.hpp"
#include "qheis/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace qheis {

inline const std::vector<Gen> &all_gens() {
    static const std::vector<Gen> g{Gen::E, Gen::Ap, Gen::N, Gen::A};
    return g;
}

/// The preset's universal R-matrix:
///   standard      exp(-2h E(x)N) exp(2h e^{hE} A (x) A+)
///   nonstandard   exp(-w A+(x)N) exp(w N (x) A+)
///   two-parameter exp(-w A+(x)N) exp(-2h E(x)N) exp(2h e^{hE} A (x) B) exp(w N(x)A+)
/// with B = (1 - e^{-w A+})/w.
inline TensorElement universal_R(Algebra &alg) {
    const TruncatedSeries h2 = alg.h_scalar() * Rational(2);
    const TruncatedSeries w1 = alg.w_scalar();
    switch (alg.preset()) {
    case Preset::standard_h: {
        auto f1 = alg.tensor_exp(alg.tensor(alg.gen(Gen::E), alg.gen(Gen::N)) * h2 * Rational(-1));
        auto f2 = alg.tensor_exp(
            alg.tensor(alg.mul(alg.exp_hE(1), alg.gen(Gen::A)), alg.gen(Gen::Ap)) * h2);
        return alg.tensor_mul(f1, f2);
    }
    case Preset::nonstandard_w: {
        auto f1 = alg.tensor_exp(alg.tensor(alg.gen(Gen::Ap), alg.gen(Gen::N)) * w1 * Rational(-1));
        auto f2 = alg.tensor_exp(alg.tensor(alg.gen(Gen::N), alg.gen(Gen::Ap)) * w1);
        return alg.tensor_mul(f1, f2);
    }
    case Preset::two_parameter:
    default: {
        auto f1 = alg.tensor_exp(alg.tensor(alg.gen(Gen::Ap), alg.gen(Gen::N)) * w1 * Rational(-1));
        auto f2 = alg.tensor_exp(alg.tensor(alg.gen(Gen::E), alg.gen(Gen::N)) * h2 * Rational(-1));
        auto f3 =
            alg.tensor_exp(alg.tensor(alg.mul(alg.exp_hE(1), alg.gen(Gen::A)), alg.b_series()) * h2);
        auto f4 = alg.tensor_exp(alg.tensor(alg.gen(Gen::N), alg.gen(Gen::Ap)) * w1);
        return alg.tensor_mul(alg.tensor_mul(f1, f2), alg.tensor_mul(f3, f4));
    }
    }
}

/// Applies the preset's antipode to one tensor slot.
inline TensorElement antipode_slot(Algebra &alg, const TensorElement &x, int slot) {
    return alg.slot_map(x, slot, [&](const PBWMonomial &m) {
        PBWElement e(alg.truncation());
        e.add(m, TruncatedSeries::one(alg.truncation()));
        return alg.antipode(e);
    });
}

namespace detail {
inline long long count(const PBWElement &x) { return static_cast<long long>(x.terms().size()); }
inline long long count(const TensorElement &x) { return static_cast<long long>(x.terms().size()); }
} // namespace detail

// ---------------------------------------------------------------------------
// Standard-h Hopf structure transported into the two-parameter algebra.
//
// The two-parameter algebra carries a second, cocommutative-at-A+ Hopf
// structure: the standard one moved along the isomorphism that sends the
// standard raising generator to B = (1 - e^{-w A+})/w.  On generators:
//   D(N) = N(x)1 + 1(x)N          S(N) = -N
//   D(E) = E(x)1 + 1(x)E          S(E) = -E
//   D(A) = A(x)e^{hE} + e^{-hE}(x)A   S(A) = -A
//   D(B) = B(x)1 + 1(x)B          S(B) = -B
// and A+ = sum_{m>=1} w^{m-1} B^m / m transports accordingly, giving
// S(A+) = -ln(2 - e^{-w A+})/w.  This is the structure in which the twist
// F = e^{w N (x) A+} produces the two-parameter Hopf maps.
// ---------------------------------------------------------------------------
class StandardTransport {
  public:
    explicit StandardTransport(Algebra &alg) : alg_(alg) {
        if (alg.preset() != Preset::two_parameter)
            throw std::invalid_argument("StandardTransport: two-parameter algebra required");
        const Truncation t = alg.truncation();
        const PBWElement B = alg.b_series();
        const TensorElement dB =
            alg.tensor(B, alg.one()) + alg.tensor(alg.one(), B);
        // A+ = sum_{m>=1} w^{m-1} B^m / m, applied to S(B) = -B and D(B)
        sap_ = alg.zero();
        dap_ = TensorElement(2, t);
        PBWElement bp = -B;
        TensorElement dbp = dB;
        TruncatedSeries wp = TruncatedSeries::one(t);
        for (int m = 1; m <= t.kw; ++m) {
            if (m > 1) {
                bp = alg.mul(bp, -B);
                dbp = alg.tensor_mul(dbp, dB);
                wp = wp * alg.w_scalar();
            }
            sap_ += bp * (wp * Rational(1, m));
            dap_ += dbp * (wp * Rational(1, m));
        }
    }

    Algebra &algebra() const { return alg_; }

    TensorElement gen_coproduct(Gen g) {
        const auto one = alg_.one();
        switch (g) {
        case Gen::E:
        case Gen::N: {
            auto x = alg_.gen(g);
            return alg_.tensor(x, one) + alg_.tensor(one, x);
        }
        case Gen::A:
            return alg_.tensor(alg_.gen(Gen::A), alg_.exp_hE(1)) +
                   alg_.tensor(alg_.exp_hE(-1), alg_.gen(Gen::A));
        case Gen::Ap:
        default:
            return dap_;
        }
    }

    PBWElement gen_antipode(Gen g) {
        if (g == Gen::Ap)
            return sap_;
        return -alg_.gen(g);
    }

    TensorElement coproduct(const PBWElement &x) {
        TensorElement r(2, alg_.truncation());
        for (const auto &[m, c] : x.terms())
            r += mono_coproduct(m) * c;
        return r;
    }

    PBWElement antipode(const PBWElement &x) {
        PBWElement r(alg_.truncation());
        for (const auto &[m, c] : x.terms())
            r += mono_antipode(m) * c;
        return r;
    }

    TruncatedSeries counit(const PBWElement &x) const { return alg_.counit(x); }

    /// D (x) id / id (x) D on arity-2 elements, with this coproduct.
    TensorElement coproduct_slot(const TensorElement &x, int slot) {
        TensorElement r(3, alg_.truncation());
        for (const auto &[m, c] : x.terms()) {
            const TensorElement d = mono_coproduct(m[static_cast<std::size_t>(slot)]);
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

    TensorElement antipode_slot(const TensorElement &x, int slot) {
        return alg_.slot_map(x, slot, [&](const PBWMonomial &m) { return mono_antipode(m); });
    }

  private:
    TensorElement mono_coproduct(const PBWMonomial &m) {
        auto it = cop_.find(m);
        if (it != cop_.end())
            return it->second;
        TensorElement r = TensorElement::unit(2, alg_.truncation());
        r = alg_.tensor_mul(r, alg_.tensor_pow_mul(gen_coproduct(Gen::E), m.i));
        r = alg_.tensor_mul(r, alg_.tensor_pow_mul(gen_coproduct(Gen::Ap), m.j));
        r = alg_.tensor_mul(r, alg_.tensor_pow_mul(gen_coproduct(Gen::N), m.k));
        r = alg_.tensor_mul(r, alg_.tensor_pow_mul(gen_coproduct(Gen::A), m.l));
        cop_.emplace(m, r);
        return r;
    }

    PBWElement mono_antipode(const PBWMonomial &m) {
        auto it = anti_.find(m);
        if (it != anti_.end())
            return it->second;
        PBWElement r = alg_.one();
        r = alg_.mul(r, alg_.pow(gen_antipode(Gen::A), m.l));
        r = alg_.mul(r, alg_.pow(gen_antipode(Gen::N), m.k));
        r = alg_.mul(r, alg_.pow(gen_antipode(Gen::Ap), m.j));
        r = alg_.mul(r, alg_.pow(gen_antipode(Gen::E), m.i));
        anti_.emplace(m, r);
        return r;
    }

    Algebra &alg_;
    PBWElement sap_{Truncation{}};
    TensorElement dap_{2, Truncation{}};
    std::map<PBWMonomial, TensorElement> cop_;
    std::map<PBWMonomial, PBWElement> anti_;
};

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

/// Coassociativity, counit, antipode axioms on generators; homomorphy of
/// Delta, epsilon and anti-homomorphy of S on generator pairs.
inline CheckReport check_hopf_axioms(Preset p, Truncation t) {
    return timed_check("hopf_axioms", preset_name(p), t, [&]() -> long long {
        Algebra alg(p, t);
        long long res = 0;
        for (Gen g : all_gens()) {
            const PBWElement x = alg.gen(g);
            const TensorElement d = alg.coproduct(x);
            res += detail::count(alg.coproduct_slot(d, 0) - alg.coproduct_slot(d, 1));
            res += detail::count(alg.counit_slot2(d, 0) - x);
            res += detail::count(alg.counit_slot2(d, 1) - x);
            const PBWElement eps1 = alg.one() * alg.counit(x);
            res += detail::count(alg.mul_slots(antipode_slot(alg, d, 0)) - eps1);
            res += detail::count(alg.mul_slots(antipode_slot(alg, d, 1)) - eps1);
        }
        for (Gen g1 : all_gens())
            for (Gen g2 : all_gens()) {
                const PBWElement x = alg.gen(g1), y = alg.gen(g2);
                const PBWElement xy = alg.mul(x, y);
                res += detail::count(alg.coproduct(xy) -
                                     alg.tensor_mul(alg.coproduct(x), alg.coproduct(y)));
                if (!(alg.counit(xy) == alg.counit(x) * alg.counit(y)))
                    ++res;
                res += detail::count(alg.antipode(xy) -
                                     alg.mul(alg.antipode(y), alg.antipode(x)));
            }
        return res;
    });
}

/// R D(g) = D'(g) R on generators; (D (x) id)(R) = R13 R23 and
/// (id (x) D)(R) = R13 R12.
inline CheckReport check_quasitriangular(Preset p, Truncation t) {
    return timed_check("quasitriangular", preset_name(p), t, [&]() -> long long {
        Algebra alg(p, t);
        long long res = 0;
        const TensorElement R = universal_R(alg);
        for (Gen g : all_gens()) {
            const TensorElement d = alg.coproduct(alg.gen(g));
            res += detail::count(alg.tensor_mul(R, d) - alg.tensor_mul(alg.flip(d), R));
        }
        const TensorElement R13 = alg.embed(R, 13), R23 = alg.embed(R, 23),
                            R12 = alg.embed(R, 12);
        res += detail::count(alg.coproduct_slot(R, 0) - alg.tensor_mul(R13, R23));
        res += detail::count(alg.coproduct_slot(R, 1) - alg.tensor_mul(R13, R12));
        return res;
    });
}

/// R12 R13 R23 = R23 R13 R12 in the tensor cube.
inline CheckReport check_qybe(Preset p, Truncation t) {
    return timed_check("qybe", preset_name(p), t, [&]() -> long long {
        Algebra alg(p, t);
        const TensorElement R = universal_R(alg);
        const TensorElement R12 = alg.embed(R, 12), R13 = alg.embed(R, 13),
                            R23 = alg.embed(R, 23);
        return detail::count(alg.tensor_mul(alg.tensor_mul(R12, R13), R23) -
                             alg.tensor_mul(alg.tensor_mul(R23, R13), R12));
    });
}

/// The parameter-dependent R-matrix with the exponentials of the spectral
/// parameter supplied as exact rationals x_u (for e^u).
inline TensorElement spectral_R(Algebra &alg, const Rational &x_u) {
    const TruncatedSeries h2 = alg.h_scalar() * Rational(2);
    const TruncatedSeries w1 = alg.w_scalar();
    auto f1 = alg.tensor_exp(alg.tensor(alg.gen(Gen::Ap), alg.gen(Gen::N)) * w1 * Rational(-1));
    auto f2 = alg.tensor_exp(alg.tensor(alg.gen(Gen::E), alg.gen(Gen::N)) * h2 * Rational(-1));
    auto f3 = alg.tensor_exp(
        alg.tensor(alg.mul(alg.exp_hE(1), alg.gen(Gen::A)), alg.b_series()) * h2 * x_u);
    auto f4 = alg.tensor_exp(alg.tensor(alg.gen(Gen::N), alg.gen(Gen::Ap)) * w1);
    return alg.tensor_mul(alg.tensor_mul(f1, f2), alg.tensor_mul(f3, f4));
}

/// R12(u) R13(u+v) R23(v) = R23(v) R13(u+v) R12(u) with e^u := x_u,
/// e^{u+v} := x_u * x_v.  NOTE: for the two-parameter algebra this residual
/// is genuinely nonzero at order h*w unless x_u = x_v = 1; the spectral
/// construction is only consistent in the one-parameter sectors (the map
/// rescaling A by e^u is not an algebra automorphism once w != 0).  The
/// check reports the honest residual.
inline CheckReport check_spectral_qybe(const Rational &x_u, const Rational &x_v, Truncation t) {
    return timed_check("spectral_qybe", preset_name(Preset::two_parameter), t,
                       [&]() -> long long {
                           Algebra alg(Preset::two_parameter, t);
                           const TensorElement R12 = alg.embed(spectral_R(alg, x_u), 12);
                           const TensorElement R13 = alg.embed(spectral_R(alg, x_u * x_v), 13);
                           const TensorElement R23 = alg.embed(spectral_R(alg, x_v), 23);
                           return detail::count(
                               alg.tensor_mul(alg.tensor_mul(R12, R13), R23) -
                               alg.tensor_mul(alg.tensor_mul(R23, R13), R12));
                       });
}

/// The twist F = e^{w N (x) A+} in a given algebra.
inline TensorElement twist_F(Algebra &alg, int sign = 1) {
    return alg.tensor_exp(alg.tensor(alg.gen(Gen::N), alg.gen(Gen::Ap)) * alg.w_scalar() *
                          Rational(sign));
}

/// Cocycle and counit conditions for F over the standard structure carried
/// by the two-parameter algebra, plus the statement that F-conjugation of
/// that coproduct produces the two-parameter one.
///
/// The cocycle conditions hold for F = e^{w N (x) A+} with A+ the genuine
/// two-parameter raising generator, whose standard coproduct is the
/// transported (non-primitive) one.  In the literal one-parameter algebra,
/// where A+ is primitive, they fail at order w^2 — the twist lives on the
/// deformed side.
inline CheckReport check_twist_conditions(Truncation t) {
    return timed_check("twist_conditions", preset_name(Preset::two_parameter), t,
                       [&]() -> long long {
        long long res = 0;
        Algebra alg(Preset::two_parameter, t);
        StandardTransport sm(alg);
        const TensorElement F = twist_F(alg), Finv = twist_F(alg, -1);
        const TensorElement F12 = alg.embed(F, 12), F23 = alg.embed(F, 23);

        // (D (x) id)(F) F12 = (id (x) D)(F) F23
        res += detail::count(alg.tensor_mul(sm.coproduct_slot(F, 0), F12) -
                             alg.tensor_mul(sm.coproduct_slot(F, 1), F23));
        // F12^{-1} (D (x) id)(F^{-1}) = F23^{-1} (id (x) D)(F^{-1})
        res += detail::count(
            alg.tensor_mul(alg.tensor_inverse(F12), sm.coproduct_slot(Finv, 0)) -
            alg.tensor_mul(alg.tensor_inverse(F23), sm.coproduct_slot(Finv, 1)));
        // counit conditions for F and F^{-1}; the contractions are 1
        res += detail::count(alg.counit_slot2(F, 0) - alg.counit_slot2(F, 1));
        res += detail::count(alg.counit_slot2(Finv, 0) - alg.counit_slot2(Finv, 1));
        res += detail::count(alg.counit_slot2(F, 0) - alg.one());

        // D_{h,w}(g) = F^{-1} D_std(g) F on all generators
        for (Gen g : all_gens()) {
            const TensorElement conj =
                alg.tensor_mul(Finv, alg.tensor_mul(sm.gen_coproduct(g), F));
            res += detail::count(alg.coproduct(alg.gen(g)) - conj);
        }
        // and on the transported raising generator B = (1 - e^{-w A+})/w
        const PBWElement B = alg.b_series();
        const TensorElement dB = alg.tensor(B, alg.one()) + alg.tensor(alg.one(), B);
        res += detail::count(alg.coproduct(B) -
                             alg.tensor_mul(Finv, alg.tensor_mul(dB, F)));
        return res;
    });
}

/// v = m(S (x) id)(F) (standard antipode, transported): closed form,
/// inverse, v^{-1} S(v) = e^{w A+}, the twisted antipode, and the
/// grouplike/coproduct identities of Proposition 1.
inline CheckReport check_v_element(Truncation t) {
    return timed_check("v_element", preset_name(Preset::two_parameter), t, [&]() -> long long {
        long long res = 0;
        Algebra alg(Preset::two_parameter, t);
        StandardTransport sm(alg);
        const TensorElement F = twist_F(alg), Finv = twist_F(alg, -1);

        const PBWElement v = alg.mul_slots(sm.antipode_slot(F, 0));
        const PBWElement vinv = alg.mul_slots(sm.antipode_slot(Finv, 1));

        // closed form: v = sum_k (-w)^k N^k (A+)^k / k!
        PBWElement vc = alg.zero();
        {
            PBWElement NkAk = alg.one();
            Rational coef = 1;
            for (int k = 0; k < t.kw; ++k) {
                if (k > 0) {
                    coef /= -k;
                    NkAk = alg.mul(alg.gen(Gen::N), alg.mul(NkAk, alg.gen(Gen::Ap)));
                }
                vc += NkAk * TruncatedSeries::monomial(coef, 0, k, t);
            }
        }
        res += detail::count(v - vc);
        res += detail::count(alg.mul(v, vinv) - alg.one());
        res += detail::count(alg.mul(vinv, v) - alg.one());

        // closed form: v^{-1} = sum_k N^k L^k / k!  with L = ln(2 - e^{-w A+})
        const PBWElement L = alg.log(alg.one() + alg.b_series() * alg.w_scalar());
        PBWElement vinvc = alg.zero();
        PBWElement Nk = alg.one(), Lk = alg.one();
        Rational kfact = 1;
        for (int k = 0; k <= t.kw; ++k) {
            if (k > 0) {
                kfact *= k;
                Nk = alg.mul(Nk, alg.gen(Gen::N));
                Lk = alg.mul(Lk, L);
            }
            vinvc += alg.mul(Nk, Lk) * Rational(1 / kfact);
        }
        res += detail::count(vinv - vinvc);

        // v^{-1} S(v) = e^{w A+}
        res += detail::count(alg.mul(vinv, sm.antipode(v)) - alg.exp_wAp(1));

        // twisted antipode on generators: S_{h,w}(g) = v^{-1} S(g) v
        for (Gen g : all_gens())
            res += detail::count(alg.antipode(alg.gen(g)) -
                                 alg.mul(alg.mul(vinv, sm.gen_antipode(g)), v));

        // Proposition 1: eps(v) = 1 and D(v) = (S (x) S)(F21^{-1}) (v (x) v) F^{-1}
        if (!(alg.counit(v) == TruncatedSeries::one(t)))
            ++res;
        const TensorElement ssF =
            sm.antipode_slot(sm.antipode_slot(alg.flip(Finv), 0), 1);
        res += detail::count(sm.coproduct(v) -
                             alg.tensor_mul(ssF, alg.tensor_mul(alg.tensor(v, v), Finv)));

        // grouplike in the twisted structure: D_{h,w}(e^{w A+}) = e^{wA+} (x) e^{wA+}
        const PBWElement ew = alg.exp_wAp(1);
        res += detail::count(alg.coproduct(ew) - alg.tensor(ew, ew));
        return res;
    });
}

/// Closed form of u_h = sum_l (-2h)^l/l! e^{-hlE} X^l A^l e^{2hEN} with
/// X = A+ (standard) or X = B (transported standard inside the
/// two-parameter algebra); extra_shift adds a global e^{c hE} factor.
inline PBWElement u_standard_form(Algebra &alg, const PBWElement &X, int sign = 1) {
    const Truncation t = alg.truncation();
    const PBWElement e2hEN =
        alg.exp(alg.mul(alg.gen(Gen::E), alg.gen(Gen::N)) * alg.h_scalar() * Rational(2 * sign));
    PBWElement r = alg.zero();
    PBWElement Xl = alg.one(), Al = alg.one();
    Rational coef = 1; // (sign * (-2))^l-style coefficient divided by l!
    for (int l = 0; l < t.kh; ++l) {
        if (l > 0) {
            coef *= Rational(sign > 0 ? -2 : 2, l);
            Xl = alg.mul(Xl, X);
            Al = alg.mul(Al, alg.gen(Gen::A));
        }
        r += alg.mul(alg.exp_hE(-sign * l), alg.mul(Xl, Al)) *
             TruncatedSeries::monomial(coef, l, 0, t);
    }
    return alg.mul(r, e2hEN);
}

/// u = m(S (x) id)(R21), closed forms, S^2(g) = u g u^{-1}, eps/Delta
/// identities, the twisted-u relation, and the ribbon element theta.
inline CheckReport check_u_ribbon(Preset p, Truncation t) {
    return timed_check("u_ribbon", preset_name(p), t, [&]() -> long long {
        Algebra alg(p, t);
        long long res = 0;
        const TensorElement R = universal_R(alg);
        const TensorElement R21 = alg.flip(R);
        const PBWElement u = alg.mul_slots(antipode_slot(alg, R21, 0));
        const PBWElement uinv = alg.inverse(u);

        // closed forms
        if (p == Preset::standard_h)
            res += detail::count(u - u_standard_form(alg, alg.gen(Gen::Ap)));
        if (p == Preset::two_parameter)
            res += detail::count(
                u - alg.mul(alg.exp_wAp(1), u_standard_form(alg, alg.b_series())));

        // S^2(g) u = u g
        for (Gen g : all_gens())
            res += detail::count(alg.mul(alg.antipode(alg.antipode(alg.gen(g))), u) -
                                 alg.mul(u, alg.gen(g)));

        // eps(u) = 1 and Delta(u) = (R21 R)^{-1} (u (x) u) = (u (x) u)(R21 R)^{-1}
        if (!(alg.counit(u) == TruncatedSeries::one(t)))
            ++res;
        const TensorElement RR = alg.tensor_mul(R21, R);
        const TensorElement RRinv = alg.tensor_inverse(RR);
        const TensorElement uu = alg.tensor(u, u);
        res += detail::count(alg.coproduct(u) - alg.tensor_mul(RRinv, uu));
        res += detail::count(alg.coproduct(u) - alg.tensor_mul(uu, RRinv));

        if (p == Preset::standard_h) {
            // S(u) = e^{-2hE} u
            res += detail::count(alg.antipode(u) - alg.mul(alg.exp_hE(-2), u));
            // closed form of the inverse
            res += detail::count(uinv - u_standard_form(alg, alg.gen(Gen::Ap), -1));
        }

        if (p == Preset::two_parameter) {
            // S(u) = g^{-2} u with the distinguished grouplike
            // g = e^{hE} e^{wA+} (theta = g^{-1} u): the w-exponent is
            // doubled, exactly like the h-exponent in the one-parameter case
            res += detail::count(
                alg.antipode(u) -
                alg.mul(alg.mul(alg.exp_hE(-2), alg.exp_wAp(-2)), u));
            // closed form of the inverse
            res += detail::count(
                uinv -
                alg.mul(u_standard_form(alg, alg.b_series(), -1), alg.exp_wAp(-1)));

            // twisted-u relation u = v^{-1} S(v) u_std, with u_std the
            // transported standard u and S the transported antipode
            StandardTransport sm(alg);
            const TensorElement F = twist_F(alg), Finv = twist_F(alg, -1);
            const PBWElement v = alg.mul_slots(sm.antipode_slot(F, 0));
            const PBWElement vinv = alg.mul_slots(sm.antipode_slot(Finv, 1));
            const PBWElement u_std = u_standard_form(alg, alg.b_series());
            res += detail::count(u - alg.mul(alg.mul(vinv, sm.antipode(v)), u_std));
            // second written form v^{-1} u_std S^{-1}(v): valid here because
            // the transported antipode is involutive (recorded as a check)
            res += detail::count(sm.antipode(sm.antipode(v)) - v);
            res += detail::count(u - alg.mul(alg.mul(vinv, u_std), sm.antipode(v)));

            // ribbon element theta = e^{-hE} u_std and its inverse
            const PBWElement theta = alg.mul(alg.exp_hE(-1), u_std);
            const PBWElement theta_inv =
                alg.mul(alg.exp_hE(1), u_standard_form(alg, alg.b_series(), -1));
            res += detail::count(alg.mul(theta, theta_inv) - alg.one());
            // theta^2 = u S(u)
            res += detail::count(alg.mul(theta, theta) - alg.mul(u, alg.antipode(u)));
            // S(theta) = theta, eps(theta) = 1
            res += detail::count(alg.antipode(theta) - theta);
            if (!(alg.counit(theta) == TruncatedSeries::one(t)))
                ++res;
            // Delta(theta) = (R21 R)^{-1} (theta (x) theta)
            res += detail::count(alg.coproduct(theta) -
                                 alg.tensor_mul(RRinv, alg.tensor(theta, theta)));
            // centrality
            for (Gen g : all_gens())
                res += detail::count(alg.commutator(theta, alg.gen(g)));
        }

        if (p == Preset::standard_h) {
            // Gomez-Sierra ribbon element theta_h = e^{-hE} u_h
            const PBWElement theta = alg.mul(alg.exp_hE(-1), u);
            res += detail::count(alg.mul(theta, theta) - alg.mul(u, alg.antipode(u)));
            res += detail::count(alg.antipode(theta) - theta);
            res += detail::count(alg.coproduct(theta) -
                                 alg.tensor_mul(RRinv, alg.tensor(theta, theta)));
            for (Gen g : all_gens())
                res += detail::count(alg.commutator(theta, alg.gen(g)));
        }
        return res;
    });
}

/// Casimir elements of the three presets commute with all generators.
inline CheckReport check_casimir(Truncation t) {
    return timed_check("casimir", "all", t, [&]() -> long long {
        long long res = 0;
        auto commutes = [&](Algebra &alg, const PBWElement &C) {
            long long c = 0;
            for (Gen g : all_gens())
                c += detail::count(alg.commutator(C, alg.gen(g)));
            return c;
        };
        {
            Algebra alg(Preset::standard_h, t);
            const PBWElement C =
                alg.mul(alg.gen(Gen::N), alg.sinh_hE_over_h()) -
                (alg.mul(alg.gen(Gen::Ap), alg.gen(Gen::A)) +
                 alg.mul(alg.gen(Gen::A), alg.gen(Gen::Ap))) *
                    Rational(1, 2);
            res += commutes(alg, C);
        }
        {
            Algebra alg(Preset::nonstandard_w, t);
            const PBWElement B = alg.b_series();
            const PBWElement C =
                alg.mul(alg.gen(Gen::N), alg.gen(Gen::E)) -
                (alg.mul(B, alg.gen(Gen::A)) + alg.mul(alg.gen(Gen::A), B)) * Rational(1, 2);
            res += commutes(alg, C);
        }
        {
            Algebra alg(Preset::two_parameter, t);
            const PBWElement B = alg.b_series();
            const PBWElement C =
                alg.mul(alg.gen(Gen::N), alg.sinh_hE_over_h()) -
                (alg.mul(B, alg.gen(Gen::A)) + alg.mul(alg.gen(Gen::A), B)) * Rational(1, 2);
            res += commutes(alg, C);
        }
        return res;
    });
}

} // namespace qheis
