#include "pta/parser.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace pta {

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else {
                break;
            }
        }
        cur_ = {Tok::End, "", line_, col_};
        if (pos_ >= src_.size()) return;
        int l = line_, co = col_;
        char c = src_[pos_];
        auto emit = [&](Tok k, std::string s) {
            cur_ = {k, std::move(s), l, co};
            pos_ += cur_.text.size();
            col_ += static_cast<int>(cur_.text.size());
        };
        if (src_.compare(pos_, 15, "allow-diagonals") == 0) return emit(Tok::Ident, "allow-diagonals");
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t end = pos_;
            while (end < src_.size() &&
                   (isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
                ++end;
            return emit(Tok::Ident, src_.substr(pos_, end - pos_));
        }
        if (isdigit(static_cast<unsigned char>(c))) {
            size_t end = pos_;
            while (end < src_.size() && isdigit(static_cast<unsigned char>(src_[end]))) ++end;
            return emit(Tok::Number, src_.substr(pos_, end - pos_));
        }
        for (const char* two : {"->", "<=", ">=", "!="}) {
            if (src_.compare(pos_, 2, two) == 0) return emit(Tok::Punct, two);
        }
        return emit(Tok::Punct, std::string(1, c));
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_{Tok::End, "", 1, 1};
};

enum class AtomOp { Lt, Le, Eq, Ge, Gt, Ne };

struct Atom {
    LinearTerm term;  // lhs - rhs
    AtomOp op;
};

struct GuardExpr {
    bool is_false = false;
    std::vector<Atom> atoms;
};

class Parser {
  public:
    explicit Parser(const std::string& src) : lex_(src) {}

    PtaModel run() {
        expect_ident("pta");
        model_.name = expect(Tok::Ident).text;
        expect_punct(";");
        bool saw_initial = false;
        std::vector<std::pair<unsigned, GuardExpr>> pending_invariants;
        struct PendingEdge {
            unsigned source, target;
            unsigned action;
            GuardExpr guard;
            std::vector<unsigned> resets;
        };
        std::vector<PendingEdge> pending_edges;

        bool body_started = false;
        while (lex_.peek().kind != Tok::End) {
            Token t = expect(Tok::Ident);
            if (t.text != "location" && t.text != "edge" && body_started)
                fail("declarations must precede locations and edges", t);
            if (t.text == "allow-diagonals") {
                model_.allow_diagonals = true;
                expect_punct(";");
            } else if (t.text == "clocks") {
                name_list(model_.clocks, t);
            } else if (t.text == "parameters") {
                name_list(model_.parameters, t);
            } else if (t.text == "actions") {
                name_list(model_.actions, t);
            } else if (t.text == "location") {
                body_started = true;
                Token nt = expect(Tok::Ident);
                if (model_.location_id(nt.text)) fail("duplicate location '" + nt.text + "'", nt);
                unsigned id = static_cast<unsigned>(model_.locations.size());
                model_.locations.push_back({nt.text, Polyhedron()});
                expect_punct("{");
                GuardExpr inv;  // empty body means TRUE invariant
                while (!try_punct("}")) {
                    Token it = expect(Tok::Ident);
                    if (it.text == "initial") {
                        if (saw_initial) fail("second initial location", it);
                        saw_initial = true;
                        model_.initial = id;
                        expect_punct(";");
                    } else if (it.text == "invariant") {
                        inv = guard_expr();
                        expect_punct(";");
                    } else {
                        fail("expected 'initial' or 'invariant'", it);
                    }
                }
                for (const Atom& a : inv.atoms)
                    if (a.op == AtomOp::Ne) fail("'!=' is not allowed in invariants", t);
                pending_invariants.emplace_back(id, std::move(inv));
            } else if (t.text == "edge") {
                PendingEdge e;
                Token st = expect(Tok::Ident);
                e.source = location_or_fail(st);
                expect_punct("->");
                Token tt = expect(Tok::Ident);
                e.target = location_or_fail(tt);
                expect_punct("{");
                bool have_action = false;
                while (!try_punct("}")) {
                    Token it = expect(Tok::Ident);
                    if (it.text == "sync") {
                        Token at = expect(Tok::Ident);
                        auto pos = std::find(model_.actions.begin(), model_.actions.end(), at.text);
                        if (pos == model_.actions.end()) fail("undeclared action '" + at.text + "'", at);
                        e.action = static_cast<unsigned>(pos - model_.actions.begin());
                        have_action = true;
                        expect_punct(";");
                    } else if (it.text == "guard") {
                        e.guard = guard_expr();
                        expect_punct(";");
                    } else if (it.text == "reset") {
                        do {
                            Token ct = expect(Tok::Ident);
                            auto pos = std::find(model_.clocks.begin(), model_.clocks.end(), ct.text);
                            if (pos == model_.clocks.end())
                                fail("undeclared clock '" + ct.text + "'", ct);
                            e.resets.push_back(static_cast<unsigned>(pos - model_.clocks.begin()));
                        } while (try_punct(","));
                        expect_punct(";");
                    } else {
                        fail("expected 'sync', 'guard' or 'reset'", it);
                    }
                }
                if (!have_action) fail("edge without 'sync' action", st);
                std::sort(e.resets.begin(), e.resets.end());
                e.resets.erase(std::unique(e.resets.begin(), e.resets.end()), e.resets.end());
                pending_edges.push_back(std::move(e));
            } else {
                fail("unexpected '" + t.text + "'", t);
            }
        }
        if (model_.locations.empty()) throw ParseError("model has no locations", 1, 1);
        if (!saw_initial) throw ParseError("no initial location declared", 1, 1);

        VarContext ctx = model_.ctx();
        for (auto& [id, inv] : pending_invariants)
            model_.locations[id].invariant = build_polyhedron(ctx, inv, {});
        for (auto& pe : pending_edges) {
            // One edge per combination of strict sides of the `!=` atoms.
            std::vector<unsigned> ne_positions;
            for (unsigned i = 0; i < pe.guard.atoms.size(); ++i)
                if (pe.guard.atoms[i].op == AtomOp::Ne) ne_positions.push_back(i);
            unsigned combos = 1u << ne_positions.size();
            for (unsigned mask = 0; mask < combos; ++mask) {
                std::vector<bool> less_side(pe.guard.atoms.size(), false);
                for (unsigned k = 0; k < ne_positions.size(); ++k)
                    less_side[ne_positions[k]] = (mask >> k) & 1;
                Edge e;
                e.source = pe.source;
                e.target = pe.target;
                e.action = pe.action;
                e.resets = pe.resets;
                e.guard = build_polyhedron(ctx, pe.guard, less_side);
                model_.edges.push_back(std::move(e));
            }
        }
        return std::move(model_);
    }

  private:
    [[noreturn]] void fail(const std::string& msg, const Token& t) {
        throw ParseError(msg, t.line, t.col);
    }

    Token expect(Tok kind) {
        if (lex_.peek().kind != kind) {
            fail(std::string("expected ") +
                     (kind == Tok::Ident ? "identifier" : kind == Tok::Number ? "number" : "symbol") +
                     ", got '" + lex_.peek().text + "'",
                 lex_.peek());
        }
        return lex_.take();
    }
    void expect_ident(const std::string& s) {
        Token t = expect(Tok::Ident);
        if (t.text != s) fail("expected '" + s + "'", t);
    }
    void expect_punct(const std::string& s) {
        Token t = lex_.take();
        if (t.kind != Tok::Punct || t.text != s) fail("expected '" + s + "'", t);
    }
    bool try_punct(const std::string& s) {
        if (lex_.peek().kind == Tok::Punct && lex_.peek().text == s) {
            lex_.take();
            return true;
        }
        return false;
    }

    void name_list(std::vector<std::string>& out, const Token& kw) {
        do {
            Token t = expect(Tok::Ident);
            if (declared(t.text)) fail("duplicate identifier '" + t.text + "'", t);
            out.push_back(t.text);
        } while (try_punct(","));
        expect_punct(";");
        (void)kw;
    }

    bool declared(const std::string& n) const {
        auto in = [&](const std::vector<std::string>& xs) {
            return std::find(xs.begin(), xs.end(), n) != xs.end();
        };
        return in(model_.clocks) || in(model_.parameters) || in(model_.actions);
    }

    unsigned location_or_fail(const Token& t) {
        auto id = model_.location_id(t.text);
        if (!id) fail("undeclared location '" + t.text + "'", t);
        return *id;
    }

    // lin := ['-'] mono (('+'|'-') mono)* ; mono := NUM ['*'] IDENT | NUM | IDENT
    LinearTerm linear(const VarContext& ctx) {
        LinearTerm t(ctx);
        bool neg = try_punct("-");
        for (;;) {
            Int coeff = neg ? -1 : 1;
            Token tk = lex_.take();
            if (tk.kind == Tok::Number) {
                coeff *= Int(tk.text, 10);
                bool star = try_punct("*");
                if (lex_.peek().kind == Tok::Ident) {
                    Token vt = lex_.take();
                    t.coeff(var_or_fail(vt)) += coeff;
                } else if (star) {
                    fail("expected variable after '*'", lex_.peek());
                } else {
                    t.constant() += coeff;
                }
            } else if (tk.kind == Tok::Ident) {
                t.coeff(var_or_fail(tk)) += coeff;
            } else {
                fail("expected term", tk);
            }
            if (try_punct("+"))
                neg = false;
            else if (try_punct("-"))
                neg = true;
            else
                break;
        }
        return t;
    }

    unsigned var_or_fail(const Token& t) {
        for (unsigned i = 0; i < model_.clocks.size(); ++i)
            if (model_.clocks[i] == t.text) return i;
        for (unsigned j = 0; j < model_.parameters.size(); ++j)
            if (model_.parameters[j] == t.text)
                return static_cast<unsigned>(model_.clocks.size()) + j;
        fail("undeclared variable '" + t.text + "'", t);
    }

    GuardExpr guard_expr() {
        GuardExpr g;
        VarContext ctx = model_.ctx();
        do {
            if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "true") {
                lex_.take();
                continue;
            }
            if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "false") {
                lex_.take();
                g.is_false = true;
                continue;
            }
            Token start = lex_.peek();
            LinearTerm lhs = linear(ctx);
            Token op = lex_.take();
            if (op.kind != Tok::Punct) fail("expected relation", op);
            AtomOp o;
            if (op.text == "<") o = AtomOp::Lt;
            else if (op.text == "<=") o = AtomOp::Le;
            else if (op.text == "=") o = AtomOp::Eq;
            else if (op.text == ">=") o = AtomOp::Ge;
            else if (op.text == ">") o = AtomOp::Gt;
            else if (op.text == "!=") o = AtomOp::Ne;
            else fail("expected relation, got '" + op.text + "'", op);
            LinearTerm rhs = linear(ctx);
            Atom a{lhs - rhs, o};
            check_atom(a, start);
            g.atoms.push_back(std::move(a));
        } while (try_punct("&"));
        return g;
    }

    void check_atom(const Atom& a, const Token& at) {
        unsigned nclocks = 0;
        Int pos = 0, negc = 0;
        for (unsigned i = 0; i < model_.clocks.size(); ++i) {
            const Int& c = a.term.coeff(i);
            if (c == 0) continue;
            ++nclocks;
            if (c > 0) pos = c;
            else negc = c;
        }
        if (nclocks == 0) return;
        if (nclocks == 1) {
            const Int& c = pos != 0 ? pos : negc;
            if (c != 1 && c != -1) fail("clock coefficient must be 1", at);
            return;
        }
        if (nclocks == 2 && model_.allow_diagonals) {
            if (pos == 1 && negc == -1) return;
            fail("diagonal atom must be a difference of two clocks", at);
        }
        fail(model_.allow_diagonals ? "at most two clocks per atom"
                                    : "at most one clock per atom (declare allow-diagonals)",
             at);
    }

    Polyhedron build_polyhedron(const VarContext& ctx, const GuardExpr& g,
                                const std::vector<bool>& ne_less_side) {
        if (g.is_false) return Polyhedron::bottom(ctx);
        std::vector<Inequality> rows;
        for (unsigned i = 0; i < g.atoms.size(); ++i) {
            const Atom& a = g.atoms[i];
            switch (a.op) {
                case AtomOp::Lt: rows.push_back({a.term, Rel::Lt}); break;
                case AtomOp::Le: rows.push_back({a.term, Rel::Le}); break;
                case AtomOp::Eq: rows.push_back({a.term, Rel::Eq}); break;
                case AtomOp::Ge: rows.push_back({-a.term, Rel::Le}); break;
                case AtomOp::Gt: rows.push_back({-a.term, Rel::Lt}); break;
                case AtomOp::Ne:
                    rows.push_back(i < ne_less_side.size() && ne_less_side[i]
                                       ? Inequality{a.term, Rel::Lt}
                                       : Inequality{-a.term, Rel::Lt});
                    break;
            }
        }
        return Polyhedron::make(ctx, std::move(rows));
    }

    Lexer lex_;
    PtaModel model_;
};

}  // namespace

PtaModel parse_model(const std::string& text) { return Parser(text).run(); }

PtaModel parse_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

}  // namespace pta
