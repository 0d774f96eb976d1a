#include "gnnbench/matlang.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace gnnbench::matlang {

std::string_view op_name(Op op) {
    switch (op) {
        case Op::var: return "var";
        case Op::matmul: return "matmul";
        case Op::add: return "add";
        case Op::transpose: return "transpose";
        case Op::diag: return "diag";
        case Op::trace: return "tr";
        case Op::ones: return "ones";
        case Op::hadamard: return "had";
        case Op::scalar_mul: return "scalar_mul";
        case Op::pointwise: return "pointwise";
    }
    return "?";
}

std::string_view pointwise_name(PointwiseFn fn) {
    switch (fn) {
        case PointwiseFn::exp: return "exp";
        case PointwiseFn::square: return "square";
        case PointwiseFn::reciprocal: return "reciprocal";
        case PointwiseFn::rsqrt: return "rsqrt";
        case PointwiseFn::binom3: return "binom3";
    }
    return "?";
}

PointwiseFn pointwise_from_name(std::string_view name) {
    for (auto fn : {PointwiseFn::exp, PointwiseFn::square, PointwiseFn::reciprocal, PointwiseFn::rsqrt,
                    PointwiseFn::binom3})
        if (pointwise_name(fn) == name) return fn;
    throw std::invalid_argument("unknown pointwise function '" + std::string(name) + "'");
}

double apply_pointwise(PointwiseFn fn, double x) {
    switch (fn) {
        case PointwiseFn::exp: return std::exp(x);
        case PointwiseFn::square: return x * x;
        case PointwiseFn::reciprocal: return 1.0 / x;
        case PointwiseFn::rsqrt: return 1.0 / std::sqrt(x);
        case PointwiseFn::binom3: return x * (x - 1.0) * (x - 2.0) / 6.0;
    }
    return x;
}

namespace {

ExprPtr make(Op op, std::vector<ExprPtr> args, std::size_t pos = 0) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->args = std::move(args);
    e->position = pos;
    return e;
}

}  // namespace

ExprPtr var(std::string name) {
    auto e = std::make_shared<Expr>();
    e->op = Op::var;
    e->name = std::move(name);
    return e;
}
ExprPtr ones() { return make(Op::ones, {}); }
ExprPtr matmul(ExprPtr lhs, ExprPtr rhs) { return make(Op::matmul, {std::move(lhs), std::move(rhs)}); }
ExprPtr add(ExprPtr lhs, ExprPtr rhs) { return make(Op::add, {std::move(lhs), std::move(rhs)}); }
ExprPtr transpose(ExprPtr e) { return make(Op::transpose, {std::move(e)}); }
ExprPtr diag(ExprPtr e) { return make(Op::diag, {std::move(e)}); }
ExprPtr trace(ExprPtr e) { return make(Op::trace, {std::move(e)}); }
ExprPtr hadamard(ExprPtr lhs, ExprPtr rhs) { return make(Op::hadamard, {std::move(lhs), std::move(rhs)}); }
ExprPtr scalar_mul(double c, ExprPtr e) {
    auto out = std::make_shared<Expr>();
    out->op = Op::scalar_mul;
    out->scalar = c;
    out->args = {std::move(e)};
    return out;
}
ExprPtr pointwise(PointwiseFn fn, ExprPtr e) {
    auto out = std::make_shared<Expr>();
    out->op = Op::pointwise;
    out->fn = fn;
    out->args = {std::move(e)};
    return out;
}

SyntaxError::SyntaxError(const std::string& what, std::size_t position)
    : std::runtime_error("syntax error at offset " + std::to_string(position) + ": " + what), position_(position) {}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { ident, number, quote, caret, star, dotstar, plus, minus, lparen, rparen, comma, colon, end };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Tok::ident, s.substr(start, i - start), start});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) ++i;
            if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
                std::size_t j = i + 1;
                if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
                if (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                    i = j;
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                }
            }
            out.push_back({Tok::number, s.substr(start, i - start), start});
            continue;
        }
        if (c == '.' && i + 1 < s.size() && s[i + 1] == '*') {
            out.push_back({Tok::dotstar, s.substr(start, 2), start});
            i += 2;
            continue;
        }
        Tok kind;
        switch (c) {
            case '\'': kind = Tok::quote; break;
            case '^': kind = Tok::caret; break;
            case '*': kind = Tok::star; break;
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            case ',': kind = Tok::comma; break;
            case ':': kind = Tok::colon; break;
            default: throw SyntaxError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({kind, s.substr(start, 1), start});
        ++i;
    }
    out.push_back({Tok::end, {}, s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    ExprPtr parse_all() {
        auto e = parse_sum();
        if (peek().kind != Tok::end) throw SyntaxError("unexpected token '" + std::string(peek().text) + "'", peek().pos);
        return e;
    }

private:
    const Token& peek() const { return tokens_[idx_]; }
    const Token& next() { return tokens_[idx_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++idx_;
        return true;
    }
    void expect(Tok k, std::string_view what) {
        if (!accept(k)) throw SyntaxError("expected " + std::string(what), peek().pos);
    }

    ExprPtr parse_sum() {
        auto lhs = parse_term();
        while (peek().kind == Tok::plus) {
            const auto pos = next().pos;
            lhs = make(Op::add, {lhs, parse_term()}, pos);
        }
        return lhs;
    }

    bool starts_operand() const {
        switch (peek().kind) {
            case Tok::ident:
            case Tok::number:
            case Tok::lparen: return true;
            default: return false;
        }
    }

    ExprPtr parse_term() {
        auto lhs = parse_scaled();
        for (;;) {
            const auto pos = peek().pos;
            if (accept(Tok::star)) {
                lhs = make(Op::matmul, {lhs, parse_scaled()}, pos);
            } else if (accept(Tok::dotstar)) {
                lhs = make(Op::hadamard, {lhs, parse_scaled()}, pos);
            } else if (starts_operand()) {
                lhs = make(Op::matmul, {lhs, parse_scaled()}, pos);
            } else {
                return lhs;
            }
        }
    }

    double parse_number() {
        const Token& t = next();
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
            throw SyntaxError("malformed number '" + std::string(t.text) + "'", t.pos);
        return v;
    }

    ExprPtr scaled_by(double c, std::size_t pos) {
        accept(Tok::star);
        auto e = std::make_shared<Expr>();
        e->op = Op::scalar_mul;
        e->scalar = c;
        e->args = {parse_scaled()};
        e->position = pos;
        return e;
    }

    ExprPtr parse_scaled() {
        const auto pos = peek().pos;
        if (peek().kind == Tok::number) return scaled_by(parse_number(), pos);
        if (accept(Tok::minus)) {
            if (peek().kind == Tok::number) return scaled_by(-parse_number(), pos);
            auto e = std::make_shared<Expr>();
            e->op = Op::scalar_mul;
            e->scalar = -1.0;
            e->args = {parse_scaled()};
            e->position = pos;
            return e;
        }
        return parse_postfix();
    }

    ExprPtr parse_postfix() {
        auto e = parse_primary();
        for (;;) {
            const auto pos = peek().pos;
            if (accept(Tok::quote)) {
                e = make(Op::transpose, {e}, pos);
            } else if (accept(Tok::caret)) {
                if (peek().kind != Tok::number) throw SyntaxError("expected integer exponent", peek().pos);
                const Token& t = next();
                unsigned k = 0;
                auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), k);
                if (ec != std::errc{} || ptr != t.text.data() + t.text.size() || k < 1)
                    throw SyntaxError("exponent must be an integer >= 1", t.pos);
                auto base = e;
                for (unsigned i = 1; i < k; ++i) e = make(Op::matmul, {e, base}, pos);
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_call(Op op, std::size_t pos) {
        expect(Tok::lparen, "'('");
        auto arg = parse_sum();
        if (op == Op::hadamard) {
            expect(Tok::comma, "','");
            auto rhs = parse_sum();
            expect(Tok::rparen, "')'");
            return make(op, {arg, rhs}, pos);
        }
        expect(Tok::rparen, "')'");
        return make(op, {arg}, pos);
    }

    ExprPtr parse_primary() {
        const Token& t = peek();
        if (accept(Tok::lparen)) {
            auto e = parse_sum();
            expect(Tok::rparen, "')'");
            return e;
        }
        if (t.kind != Tok::ident) throw SyntaxError("expected an operand", t.pos);
        next();
        const std::string_view id = t.text;
        if (id == "ones") return make(Op::ones, {}, t.pos);
        if (id == "diag" && peek().kind == Tok::lparen) return parse_call(Op::diag, t.pos);
        if (id == "tr" && peek().kind == Tok::lparen) return parse_call(Op::trace, t.pos);
        if (id == "had" && peek().kind == Tok::lparen) return parse_call(Op::hadamard, t.pos);
        if (id == "f" && accept(Tok::colon)) {
            const Token& name = peek();
            if (name.kind != Tok::ident) throw SyntaxError("expected function name after 'f:'", name.pos);
            next();
            PointwiseFn fn;
            try {
                fn = pointwise_from_name(name.text);
            } catch (const std::invalid_argument& e) {
                throw SyntaxError(e.what(), name.pos);
            }
            auto call = parse_call(Op::pointwise, t.pos);
            auto out = std::make_shared<Expr>(*call);
            out->fn = fn;
            return out;
        }
        auto e = std::make_shared<Expr>();
        e->op = Op::var;
        e->name = std::string(id);
        e->position = t.pos;
        return e;
    }

    std::vector<Token> tokens_;
    std::size_t idx_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const Expr& e) {
    switch (e.op) {
        case Op::var: return e.name;
        case Op::ones: return "ones";
        case Op::matmul: return "(" + to_string(*e.args[0]) + " * " + to_string(*e.args[1]) + ")";
        case Op::add: return "(" + to_string(*e.args[0]) + " + " + to_string(*e.args[1]) + ")";
        case Op::transpose: return "(" + to_string(*e.args[0]) + ")'";
        case Op::diag: return "diag(" + to_string(*e.args[0]) + ")";
        case Op::trace: return "tr(" + to_string(*e.args[0]) + ")";
        case Op::hadamard: return "had(" + to_string(*e.args[0]) + ", " + to_string(*e.args[1]) + ")";
        case Op::scalar_mul: {
            std::ostringstream os;
            os.precision(17);
            os << e.scalar;
            return "(" + os.str() + " * " + to_string(*e.args[0]) + ")";
        }
        case Op::pointwise:
            return "f:" + std::string(pointwise_name(e.fn)) + "(" + to_string(*e.args[0]) + ")";
    }
    return {};
}

// ---------------------------------------------------------------------------
// Shapes and fragments

namespace {

std::string describe(const Expr& e) {
    return std::string(op_name(e.op)) + " at offset " + std::to_string(e.position);
}

std::string shape_str(Shape s) { return std::to_string(s.rows) + "x" + std::to_string(s.cols); }

}  // namespace

Shape shape_check(const Expr& e, std::size_t n) {
    if (n == 0) throw ShapeError("ambient size must be positive");
    switch (e.op) {
        case Op::var: return {n, n};
        case Op::ones: return {n, 1};
        case Op::matmul: {
            const Shape a = shape_check(*e.args[0], n);
            const Shape b = shape_check(*e.args[1], n);
            if (a.cols != b.rows)
                throw ShapeError(describe(e) + ": cannot multiply " + shape_str(a) + " by " + shape_str(b));
            return {a.rows, b.cols};
        }
        case Op::add:
        case Op::hadamard: {
            const Shape a = shape_check(*e.args[0], n);
            const Shape b = shape_check(*e.args[1], n);
            if (a != b) throw ShapeError(describe(e) + ": operand shapes " + shape_str(a) + " and " + shape_str(b) + " differ");
            return a;
        }
        case Op::transpose: {
            const Shape a = shape_check(*e.args[0], n);
            return {a.cols, a.rows};
        }
        case Op::diag: {
            const Shape a = shape_check(*e.args[0], n);
            if (a.cols != 1) throw ShapeError(describe(e) + ": argument must be a column vector, got " + shape_str(a));
            return {a.rows, a.rows};
        }
        case Op::trace: {
            const Shape a = shape_check(*e.args[0], n);
            if (a.rows != a.cols) throw ShapeError(describe(e) + ": argument must be square, got " + shape_str(a));
            return {1, 1};
        }
        case Op::scalar_mul:
        case Op::pointwise: return shape_check(*e.args[0], n);
    }
    throw ShapeError("unknown node");
}

bool op_allowed(Op op, const OpSet& ops) {
    switch (op) {
        case Op::var:
        case Op::matmul:
        case Op::transpose:
        case Op::ones:
        case Op::diag: return true;
        case Op::trace: return ops.base != Fragment::L1;
        case Op::hadamard: return ops.base == Fragment::L3;
        case Op::add:
        case Op::scalar_mul:
        case Op::pointwise: return ops.enriched;
    }
    return false;
}

bool fragment_check(const Expr& e, const OpSet& ops) {
    if (!op_allowed(e.op, ops)) return false;
    for (const auto& a : e.args)
        if (!fragment_check(*a, ops)) return false;
    return true;
}

OpSet minimal_fragment(const Expr& e) {
    for (bool enriched : {false, true})
        for (auto base : {Fragment::L1, Fragment::L2, Fragment::L3})
            if (fragment_check(e, {base, enriched})) return {base, enriched};
    return {Fragment::L3, true};
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

Matrix eval_node(const Expr& e, const Binding& binding, std::size_t n) {
    switch (e.op) {
        case Op::var: {
            auto it = binding.find(e.name);
            if (it == binding.end()) throw EvalError("unbound variable '" + e.name + "'");
            return it->second;
        }
        case Op::ones: return Matrix::ones(n, 1);
        case Op::matmul: return gnnbench::matmul(eval_node(*e.args[0], binding, n), eval_node(*e.args[1], binding, n));
        case Op::add: return eval_node(*e.args[0], binding, n) + eval_node(*e.args[1], binding, n);
        case Op::transpose: return eval_node(*e.args[0], binding, n).transpose();
        case Op::diag: return Matrix::diag(eval_node(*e.args[0], binding, n));
        case Op::trace: return Matrix(1, 1, eval_node(*e.args[0], binding, n).trace());
        case Op::hadamard:
            return gnnbench::hadamard(eval_node(*e.args[0], binding, n), eval_node(*e.args[1], binding, n));
        case Op::scalar_mul: return eval_node(*e.args[0], binding, n) * e.scalar;
        case Op::pointwise: {
            Matrix m = eval_node(*e.args[0], binding, n);
            for (double& v : m.data()) v = apply_pointwise(e.fn, v);
            return m;
        }
    }
    throw EvalError("unknown node");
}

}  // namespace

Matrix eval(const Expr& e, const Binding& binding, std::size_t n) {
    for (const auto& [name, m] : binding)
        if (m.rows() != n || m.cols() != n)
            throw EvalError("variable '" + name + "' is not " + std::to_string(n) + "x" + std::to_string(n));
    try {
        shape_check(e, n);
    } catch (const ShapeError& err) {
        throw EvalError(err.what());
    }
    return eval_node(e, binding, n);
}

Matrix eval(const Expr& e, const Binding& binding) {
    if (binding.empty()) throw EvalError("cannot infer ambient size from an empty binding");
    return eval(e, binding, binding.begin()->second.rows());
}

namespace {

void collect_vars(const Expr& e, std::set<std::string>& out) {
    if (e.op == Op::var) out.insert(e.name);
    for (const auto& a : e.args) collect_vars(*a, out);
}

}  // namespace

double eval_sentence(const Expr& e, const Graph& g) {
    std::set<std::string> names;
    collect_vars(e, names);
    Binding b;
    const Matrix adj = g.adjacency();
    for (const auto& name : names) b.emplace(name, adj);
    const Matrix out = eval(e, b, g.n());
    if (out.rows() != 1 || out.cols() != 1) throw EvalError("expression is not a sentence");
    return out(0, 0);
}

bool sentence_distinguishes(const Expr& e, const Graph& g, const Graph& h, double tol) {
    return std::abs(eval_sentence(e, g) - eval_sentence(e, h)) > tol;
}

// ---------------------------------------------------------------------------
// Sentence enumeration

std::vector<ExprPtr> enumerate_sentences(const OpSet& ops, unsigned max_depth, std::size_t cap) {
    constexpr std::size_t kProbe = 7;            // ambient size used only to classify shapes
    constexpr std::size_t kPerDepthLimit = 160;  // bounds the binary-product blow-up
    struct Item {
        ExprPtr e;
        Shape s;
    };
    std::vector<std::vector<Item>> by_depth;
    std::set<std::string> seen;
    std::vector<ExprPtr> sentences;

    auto offer = [&](std::vector<Item>& level, ExprPtr e) {
        Shape s;
        try {
            s = shape_check(*e, kProbe);
        } catch (const ShapeError&) {
            return;
        }
        if (!seen.insert(to_string(*e)).second) return;
        if (s.is_sentence() && sentences.size() < cap) sentences.push_back(e);
        if (level.size() < kPerDepthLimit) level.push_back({std::move(e), s});
    };

    by_depth.emplace_back();
    offer(by_depth[0], var("A"));
    offer(by_depth[0], ones());

    for (unsigned d = 1; d < max_depth && sentences.size() < cap; ++d) {
        std::vector<Item> level;
        const auto& prev = by_depth[d - 1];
        for (const auto& it : prev) {
            offer(level, transpose(it.e));
            offer(level, diag(it.e));
            if (op_allowed(Op::trace, ops)) offer(level, trace(it.e));
        }
        for (unsigned dl = 0; dl < d; ++dl) {
            for (const auto& lhs : by_depth[dl]) {
                for (unsigned dr = 0; dr < d; ++dr) {
                    if (dl != d - 1 && dr != d - 1) continue;
                    for (const auto& rhs : by_depth[dr]) {
                        if (lhs.s.cols == rhs.s.rows) offer(level, matmul(lhs.e, rhs.e));
                        if (op_allowed(Op::hadamard, ops) && lhs.s == rhs.s) offer(level, hadamard(lhs.e, rhs.e));
                    }
                }
            }
        }
        by_depth.push_back(std::move(level));
    }
    return sentences;
}

}  // namespace gnnbench::matlang
