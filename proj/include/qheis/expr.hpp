#pragma once

// Prefix s-expression parser for building algebra elements from text.
//
//   expr   := atom | '(' op expr... ')'
//   atom   := 'E' | 'Ap' | 'N' | 'A' | '1' | 'h' | 'w' | rational
//   op     := '+' | '*' | 'neg' | 'tensor' | 'exp'
//           | 'sinhover' param | 'expm1over' param      (param := 'h' | 'w')
//
// '+' and '*' are n-ary (n >= 1).  'tensor' takes two or three plain
// (non-tensor) operands and yields a tensor element; '+' / '*' / 'exp' /
// 'neg' also act on tensor elements, but plain and tensor operands cannot
// be mixed.  '(sinhover h x)' builds sinh(h*x)/h and '(expm1over w x)'
// builds (e^{w*x} - 1)/w; the explicit parameter powers make these finite
// for any x.  'exp' instead requires its operand to have no constant term
// so the series terminates under truncation.

#include "qheis/pbw.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <optional>
#include <variant>
#include <vector>

namespace qheis {

using ExprValue = std::variant<PBWElement, TensorElement>;

namespace detail {

struct ExprParser {
    Algebra &alg;
    const std::string &src;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string &msg) const {
        throw std::invalid_argument("expression error at position " +
                                    std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
            ++pos;
    }

    std::string token() {
        skip_ws();
        if (pos >= src.size()) fail("unexpected end of input");
        if (src[pos] == '(' || src[pos] == ')') return std::string(1, src[pos++]);
        std::size_t start = pos;
        while (pos < src.size() && !std::isspace(static_cast<unsigned char>(src[pos])) &&
               src[pos] != '(' && src[pos] != ')')
            ++pos;
        return src.substr(start, pos - start);
    }

    std::string peek() {
        std::size_t save = pos;
        std::string t = token();
        pos = save;
        return t;
    }

    static bool is_rational(const std::string &t) {
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i >= t.size()) return false;
        bool digit = false, slash = false;
        for (; i < t.size(); ++i) {
            if (std::isdigit(static_cast<unsigned char>(t[i]))) digit = true;
            else if (t[i] == '/' && !slash && digit) { slash = true; digit = false; }
            else return false;
        }
        return digit;
    }

    TensorElement tensor_arg(const ExprValue &v, const char *what) {
        if (!std::holds_alternative<TensorElement>(v))
            fail(std::string(what) + ": cannot mix plain and tensor operands");
        return std::get<TensorElement>(v);
    }

    // Coefficient of the identity monomial, provided the element is a pure
    // scalar multiple of 1 (so it can multiply a tensor element).
    TruncatedSeries scalar_series(const PBWElement &x) {
        TruncatedSeries c = TruncatedSeries::constant(0, alg.truncation());
        for (const auto &[m, v] : x.terms()) {
            if (m != PBWMonomial{0, 0, 0, 0})
                fail("cannot mix plain and tensor operands (non-scalar factor)");
            c = v;
        }
        return c;
    }

    PBWElement scalar(const ExprValue &v, const char *what) {
        if (!std::holds_alternative<PBWElement>(v))
            fail(std::string(what) + " expects a plain (non-tensor) operand");
        return std::get<PBWElement>(v);
    }

    ExprValue parse() {
        std::string t = token();
        if (t == ")") fail("unexpected ')'");
        if (t != "(") return atom(t);
        std::string op = token();
        ExprValue result = apply(op);
        skip_ws();
        if (pos >= src.size() || src[pos] != ')') fail("expected ')'");
        ++pos;
        return result;
    }

    ExprValue atom(const std::string &t) {
        const Truncation tr = alg.truncation();
        if (t == "E") return alg.gen(Gen::E);
        if (t == "Ap") return alg.gen(Gen::Ap);
        if (t == "N") return alg.gen(Gen::N);
        if (t == "A") return alg.gen(Gen::A);
        if (t == "1") return alg.one();
        if (t == "h") return alg.one() * alg.h_scalar();
        if (t == "w") return alg.one() * alg.w_scalar();
        if (is_rational(t))
            return alg.one() * TruncatedSeries::constant(Rational(t), tr);
        fail("unknown atom '" + t + "'");
    }

    std::vector<ExprValue> operands(std::size_t min_n) {
        std::vector<ExprValue> out;
        while (peek() != ")") out.push_back(parse());
        if (out.size() < min_n) fail("operator needs at least " +
                                     std::to_string(min_n) + " operand(s)");
        return out;
    }

    ExprValue apply(const std::string &op) {
        if (op == "+" || op == "*") {
            auto args = operands(1);
            bool any_tensor = false;
            for (const auto &a : args)
                any_tensor |= std::holds_alternative<TensorElement>(a);
            if (!any_tensor) {
                PBWElement acc = std::get<PBWElement>(args[0]);
                for (std::size_t i = 1; i < args.size(); ++i) {
                    const auto &q = std::get<PBWElement>(args[i]);
                    acc = (op == "+") ? acc + q : alg.mul(acc, q);
                }
                return acc;
            }
            if (op == "+") {
                TensorElement acc = tensor_arg(args[0], "'+'");
                for (std::size_t i = 1; i < args.size(); ++i)
                    acc += tensor_arg(args[i], "'+'");
                return acc;
            }
            // product: plain operands act as scalar coefficients on the tensor part
            TruncatedSeries coeff = TruncatedSeries::one(alg.truncation());
            std::optional<TensorElement> acc;
            for (auto &a : args) {
                if (auto *p = std::get_if<PBWElement>(&a))
                    coeff = coeff * scalar_series(*p);
                else if (!acc)
                    acc = std::get<TensorElement>(a);
                else
                    acc = alg.tensor_mul(*acc, std::get<TensorElement>(a));
            }
            return *acc * coeff;
        }
        if (op == "neg") {
            auto args = operands(1);
            if (args.size() != 1) fail("'neg' takes one operand");
            if (auto *p = std::get_if<PBWElement>(&args[0])) return -*p;
            return -std::get<TensorElement>(args[0]);
        }
        if (op == "exp") {
            auto args = operands(1);
            if (args.size() != 1) fail("'exp' takes one operand");
            if (auto *p = std::get_if<PBWElement>(&args[0])) {
                if (!p->is_param_positive())
                    fail("'exp' operand must have no constant term");
                return alg.exp(*p);
            }
            const auto &t = std::get<TensorElement>(args[0]);
            if (!t.is_param_positive())
                fail("'exp' operand must have no constant term");
            return alg.tensor_exp(t);
        }
        if (op == "tensor") {
            auto args = operands(2);
            if (args.size() > 3) fail("'tensor' takes two or three operands");
            std::vector<PBWElement> slots;
            for (auto &a : args) slots.push_back(scalar(a, "'tensor'"));
            if (slots.size() == 2) return alg.tensor(slots[0], slots[1]);
            return alg.tensor(slots[0], slots[1], slots[2]);
        }
        if (op == "sinhover" || op == "expm1over") {
            std::string pt = token();
            if (pt != "h" && pt != "w") fail("'" + op + "' needs parameter 'h' or 'w'");
            Param param = pt == "h" ? Param::h : Param::w;
            auto args = operands(1);
            if (args.size() != 1) fail("'" + op + "' takes one operand after the parameter");
            PBWElement x = scalar(args[0], ("'" + op + "'").c_str());
            return op == "sinhover" ? alg.sinh_over(x, param) : alg.expm1_over(x, param);
        }
        fail("unknown operator '" + op + "'");
    }
};

} // namespace detail

// Parses a prefix s-expression into a PBW or tensor element of `alg`.
inline ExprValue build_element(Algebra &alg, const std::string &text) {
    detail::ExprParser p{alg, text};
    ExprValue v = p.parse();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input after expression");
    return v;
}

} // namespace qheis
