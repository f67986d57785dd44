// Copyright 2026 The pgqlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pgqlab/text.h"

#include <cctype>
#include <charconv>

#include "pgqlab/error.h"

namespace pgqlab {

namespace {

struct Token {
  enum Kind { kIdent, kInt, kStr, kPunct, kEnd };
  Kind kind;
  std::string text;  // identifier, punctuation, or decoded string
  int64_t num = 0;
  size_t pos = 0;
};

bool IdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> Lex(std::string_view s) {
  static const char* kMulti[] = {"<-[", "]->", "-[", "]-"};
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t start = i;
    if (IdentStart(c)) {
      while (i < s.size() && IdentChar(s[i])) ++i;
      out.push_back({Token::kIdent, std::string(s.substr(start, i - start)), 0,
                     start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && i + 1 < s.size() &&
         std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      int64_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + i, v);
      if (ec != std::errc()) throw SyntaxError(start, "integer out of range");
      out.push_back({Token::kInt, std::string(s.substr(start, i - start)), v,
                     start});
      continue;
    }
    if (c == '"') {
      ++i;
      std::string text;
      for (;;) {
        if (i >= s.size()) throw SyntaxError(start, "unterminated string");
        char d = s[i++];
        if (d == '"') break;
        if (d == '\\') {
          if (i >= s.size()) throw SyntaxError(start, "unterminated string");
          char e = s[i++];
          if (e == 'n') {
            text += '\n';
          } else if (e == 't') {
            text += '\t';
          } else {
            text += e;
          }
        } else {
          text += d;
        }
      }
      out.push_back({Token::kStr, std::move(text), 0, start});
      continue;
    }
    bool matched = false;
    for (const char* m : kMulti) {
      std::string_view mv(m);
      if (s.substr(i, mv.size()) == mv) {
        out.push_back({Token::kPunct, std::string(mv), 0, start});
        i += mv.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::string_view("()[]{},;.=!&|<>$*").find(c) != std::string_view::npos) {
      out.push_back({Token::kPunct, std::string(1, c), 0, start});
      ++i;
      continue;
    }
    throw SyntaxError(start, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::kEnd, "", 0, s.size()});
  return out;
}

std::string Describe(const Token& t) {
  switch (t.kind) {
    case Token::kEnd: return "end of input";
    case Token::kStr: return "string";
    default: return "'" + t.text + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(Lex(text)) {}

  const Token& Peek(size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& Next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool IsPunct(std::string_view p, size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind == Token::kPunct && t.text == p;
  }
  bool IsWord(std::string_view w, size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind == Token::kIdent && t.text == w;
  }
  bool Accept(std::string_view p) {
    if (!IsPunct(p)) return false;
    Next();
    return true;
  }
  [[noreturn]] void Fail(const std::string& what) const {
    throw SyntaxError(Peek().pos, "expected " + what + ", found " +
                                      Describe(Peek()));
  }
  void Expect(std::string_view p) {
    if (!Accept(p)) Fail("'" + std::string(p) + "'");
  }
  void ExpectWord(std::string_view w) {
    if (!IsWord(w)) Fail("'" + std::string(w) + "'");
    Next();
  }
  std::string Ident() {
    if (Peek().kind != Token::kIdent) Fail("identifier");
    return Next().text;
  }
  size_t Nat() {
    if (Peek().kind != Token::kInt || Peek().num < 0) Fail("natural number");
    return static_cast<size_t>(Next().num);
  }
  Value Literal() {
    const Token& t = Peek();
    if (t.kind == Token::kInt) return Value(Next().num);
    if (t.kind == Token::kStr) return Value(Next().text);
    Fail("integer or string");
  }
  // Keys and labels: identifier, string or integer.
  Value Key() {
    if (Peek().kind == Token::kIdent) return Value(Next().text);
    return Literal();
  }
  void End() {
    if (Peek().kind != Token::kEnd) Fail("end of input");
  }

  // ---- conditions
  ConditionPtr Cond() {
    ConditionPtr c = CondAnd();
    while (Accept("|")) c = MakeCondOr(c, CondAnd());
    return c;
  }
  ConditionPtr CondAnd() {
    ConditionPtr c = CondUnary();
    while (Accept("&")) c = MakeCondAnd(c, CondUnary());
    return c;
  }
  ConditionPtr CondUnary() {
    if (Accept("!")) return MakeCondNot(CondUnary());
    if (Accept("(")) {
      ConditionPtr c = Cond();
      Expect(")");
      return c;
    }
    if (Peek().kind == Token::kIdent && IsPunct(".", 1)) {
      std::string x = Next().text;
      Expect(".");
      Value k = Key();
      Expect("=");
      std::string y = Ident();
      Expect(".");
      Value k2 = Key();
      return MakePropEq(x, k, y, k2);
    }
    if (Peek().kind == Token::kEnd || Peek().kind == Token::kPunct) {
      Fail("condition");
    }
    Value label = Key();
    Expect("(");
    std::string x = Ident();
    Expect(")");
    return MakeHasLabel(label, x);
  }

  // ---- patterns
  bool StartsPrimary() const {
    return IsPunct("(") || IsPunct("-[") || IsPunct("<-[");
  }
  PatternPtr Pat() {
    PatternPtr p = PatConcat();
    while (Accept("|")) p = MakeAlt(p, PatConcat());
    return p;
  }
  PatternPtr PatConcat() {
    PatternPtr p = PatPostfix();
    while (StartsPrimary()) p = MakeConcat(p, PatPostfix());
    return p;
  }
  PatternPtr PatPostfix() {
    PatternPtr p = PatPrimary();
    for (;;) {
      if (Accept("*")) {
        p = MakeStar(p);
      } else if (Accept("{")) {
        size_t lo = Nat();
        RepeatBound hi = lo;
        if (Accept(",")) {
          if (Accept("*")) {
            hi = std::nullopt;
          } else {
            hi = Nat();
          }
        }
        Expect("}");
        p = MakeRepeat(p, lo, hi);
      } else if (Accept("<")) {
        ConditionPtr c = Cond();
        Expect(">");
        p = MakeFilter(p, c);
      } else {
        return p;
      }
    }
  }
  std::string OptVar(std::string_view close) {
    std::string v;
    if (Peek().kind == Token::kIdent) v = Next().text;
    Expect(close);
    return v;
  }
  PatternPtr PatPrimary() {
    if (Accept("-[")) return MakeFwdEdge(OptVar("]->"));
    if (Accept("<-[")) return MakeBwdEdge(OptVar("]-"));
    if (!Accept("(")) Fail("pattern");
    if (Accept(")")) return MakeNode();
    if (Peek().kind == Token::kIdent) {
      std::string v = Next().text;
      Expect(")");
      return MakeNode(v);
    }
    PatternPtr p = Pat();
    Expect(")");
    return p;
  }

  OutputPattern OutPat() {
    OutputPattern op;
    op.body = Pat();
    ExpectWord("OUTPUT");
    Expect("(");
    if (!IsPunct(")")) {
      do {
        OutputItem item;
        item.var = Ident();
        if (Accept(".")) item.key = Key();
        op.omega.push_back(std::move(item));
      } while (Accept(","));
    }
    Expect(")");
    return op;
  }

  // ---- selection conditions
  SelCondPtr Sel() {
    SelCondPtr c = SelAnd();
    while (Accept("|")) c = SelCond::MakeOr(c, SelAnd());
    return c;
  }
  SelCondPtr SelAnd() {
    SelCondPtr c = SelUnary();
    while (Accept("&")) c = SelCond::MakeAnd(c, SelUnary());
    return c;
  }
  SelCondPtr SelUnary() {
    if (Accept("!")) return SelCond::MakeNot(SelUnary());
    if (Accept("(")) {
      SelCondPtr c = Sel();
      Expect(")");
      return c;
    }
    Expect("$");
    size_t i = Nat();
    Expect("=");
    Expect("$");
    size_t j = Nat();
    if (i == 0 || j == 0) throw SyntaxError(Peek().pos, "positions start at 1");
    return SelCond::Eq(i, j);
  }

  // ---- queries
  QueryPtr Q() {
    QueryPtr q = QProduct();
    for (;;) {
      if (IsWord("UNION")) {
        Next();
        q = MakeUnion(q, QProduct());
      } else if (IsWord("MINUS")) {
        Next();
        q = MakeDiff(q, QProduct());
      } else {
        return q;
      }
    }
  }
  QueryPtr QProduct() {
    QueryPtr q = QPrimary();
    while (IsWord("X")) {
      Next();
      q = MakeProduct(q, QPrimary());
    }
    return q;
  }
  static bool IsQueryKeyword(const std::string& w) {
    return w == "REL" || w == "CONST" || w == "PI" || w == "SIGMA" ||
           w == "MATCH" || w == "TCLOOP";
  }
  QueryPtr QPrimary() {
    if (Accept("(")) {
      QueryPtr q = Q();
      Expect(")");
      return q;
    }
    if (IsWord("REL")) {
      Next();
      return MakeRel(Ident());
    }
    if (IsWord("CONST")) {
      Next();
      return MakeConst(Literal());
    }
    if (IsWord("PI")) {
      Next();
      Expect("[");
      std::vector<size_t> idx;
      if (!IsPunct("]")) {
        do {
          size_t i = Nat();
          if (i == 0) throw SyntaxError(Peek().pos, "positions start at 1");
          idx.push_back(i);
        } while (Accept(","));
      }
      Expect("]");
      Expect("(");
      QueryPtr q = Q();
      Expect(")");
      return MakeProject(std::move(idx), q);
    }
    if (IsWord("SIGMA")) {
      Next();
      Expect("[");
      SelCondPtr c = Sel();
      Expect("]");
      Expect("(");
      QueryPtr q = Q();
      Expect(")");
      return MakeSelect(c, q);
    }
    if (IsWord("TCLOOP")) {
      Next();
      Expect("[");
      size_t k = Nat();
      Expect(",");
      size_t l = Nat();
      Expect("]");
      Expect("(");
      QueryPtr q = Q();
      Expect(")");
      return MakeTcLoop(k, l, q);
    }
    if (IsWord("MATCH")) {
      Next();
      OutputPattern op = OutPat();
      ExpectWord("ON");
      Expect("(");
      bool names = Peek().kind == Token::kIdent &&
                   !IsQueryKeyword(Peek().text);
      std::array<std::string, 6> rels;
      std::array<QueryPtr, 6> subs;
      for (size_t i = 0; i < 6; ++i) {
        if (i > 0) Expect(";");
        if (names) {
          rels[i] = Ident();
        } else {
          subs[i] = Q();
        }
      }
      Expect(")");
      if (IsWord("ARITY")) {
        if (names) Fail("end of a read-only MATCH");
        Next();
        std::optional<size_t> k;
        if (!Accept("*")) k = Nat();
        return MakeMatchEXT(std::move(op), subs, k);
      }
      if (names) return MakeMatchRO(std::move(op), rels);
      return MakeMatchRW(std::move(op), subs);
    }
    Fail("query");
  }

  // ---- formulas
  FormulaPtr F() {
    FormulaPtr f = FAnd();
    while (Accept("|")) f = MakeFOr(f, FAnd());
    return f;
  }
  FormulaPtr FAnd() {
    FormulaPtr f = FUnary();
    while (Accept("&")) f = MakeFAnd(f, FUnary());
    return f;
  }
  std::vector<std::string> VarList(std::string_view stop) {
    std::vector<std::string> out;
    if (IsPunct(stop)) return out;
    do {
      out.push_back(Ident());
    } while (Accept(","));
    return out;
  }
  FormulaPtr FUnary() {
    if (Accept("!")) return MakeFNot(FUnary());
    if (Accept("(")) {
      FormulaPtr f = F();
      Expect(")");
      return f;
    }
    if ((IsWord("E") || IsWord("A")) && Peek(1).kind == Token::kIdent &&
        IsPunct(".", 2)) {
      bool exists = Next().text == "E";
      std::string v = Next().text;
      Expect(".");
      FormulaPtr body = F();
      return exists ? MakeExists(v, body) : MakeForall(v, body);
    }
    if (IsWord("TC") && IsPunct("[", 1)) {
      size_t at = Peek().pos;
      Next();
      Expect("[");
      auto u = VarList(";");
      Expect(";");
      auto v = VarList("]");
      Expect("]");
      Expect("(");
      FormulaPtr body = F();
      Expect(")");
      Expect("(");
      auto x = VarList(";");
      Expect(";");
      auto y = VarList(")");
      Expect(")");
      try {
        return MakeTC(u, v, body, x, y);
      } catch (const Error& e) {
        throw SyntaxError(at, e.what());
      }
    }
    std::string name = Ident();
    if (Accept("(")) {
      auto vars = VarList(")");
      Expect(")");
      return MakeAtom(name, vars);
    }
    Expect("=");
    if (Peek().kind == Token::kIdent) return MakeEq(name, Next().text);
    return MakeEqConst(name, Literal());
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

template <typename T, typename Fn>
T ParseAll(std::string_view text, Fn fn) {
  Parser p(text);
  T out = fn(p);
  p.End();
  return out;
}

bool LooksLikeIdent(const std::string& s) {
  if (s.empty() || !IdentStart(s[0])) return false;
  for (char c : s) {
    if (!IdentChar(c)) return false;
  }
  return true;
}

std::string Join(const std::vector<std::string>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i];
  }
  return out;
}

// Pattern precedence: 0 alternation, 1 concatenation, 2 postfix/atom.
int PatLevel(const Pattern& p) {
  if (std::holds_alternative<Pattern::Alt>(p.node)) return 0;
  if (std::holds_alternative<Pattern::Concat>(p.node)) return 1;
  return 2;
}

std::string PatAt(const Pattern& p, int need) {
  std::string s = ToText(p);
  return PatLevel(p) < need ? "(" + s + ")" : s;
}

int CondLevel(const Condition& c) {
  if (std::holds_alternative<Condition::Or>(c.node)) return 0;
  if (std::holds_alternative<Condition::And>(c.node)) return 1;
  return 2;
}

std::string CondAt(const Condition& c, int need) {
  std::string s = ToText(c);
  return CondLevel(c) < need ? "(" + s + ")" : s;
}

int SelLevel(const SelCond& c) {
  if (std::holds_alternative<SelCond::Or>(c.node)) return 0;
  if (std::holds_alternative<SelCond::And>(c.node)) return 1;
  return 2;
}

std::string SelAt(const SelCond& c, int need) {
  std::string s = ToText(c);
  return SelLevel(c) < need ? "(" + s + ")" : s;
}

int QueryLevel(const Query& q) {
  if (std::holds_alternative<Query::Union>(q.node) ||
      std::holds_alternative<Query::Diff>(q.node)) {
    return 0;
  }
  if (std::holds_alternative<Query::Product>(q.node)) return 1;
  return 2;
}

std::string QueryAt(const Query& q, int need) {
  std::string s = ToText(q);
  return QueryLevel(q) < need ? "(" + s + ")" : s;
}

bool FormulaAtomic(const Formula& f) {
  return std::holds_alternative<Formula::Atom>(f.node) ||
         std::holds_alternative<Formula::TC>(f.node);
}

}  // namespace

PatternPtr ParsePattern(std::string_view text) {
  return ParseAll<PatternPtr>(text, [](Parser& p) { return p.Pat(); });
}
ConditionPtr ParseCondition(std::string_view text) {
  return ParseAll<ConditionPtr>(text, [](Parser& p) { return p.Cond(); });
}
OutputPattern ParseOutputPattern(std::string_view text) {
  return ParseAll<OutputPattern>(text, [](Parser& p) { return p.OutPat(); });
}
SelCondPtr ParseSelCond(std::string_view text) {
  return ParseAll<SelCondPtr>(text, [](Parser& p) { return p.Sel(); });
}
QueryPtr ParseQuery(std::string_view text) {
  return ParseAll<QueryPtr>(text, [](Parser& p) { return p.Q(); });
}
FormulaPtr ParseFormula(std::string_view text) {
  return ParseAll<FormulaPtr>(text, [](Parser& p) { return p.F(); });
}

std::string KeyToText(const Value& v) {
  if (v.is_str() && LooksLikeIdent(v.as_str())) return v.as_str();
  return v.ToString();
}

std::string ToText(const Condition& c) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Condition::PropEq>) {
          return n.var + "." + KeyToText(n.key) + " = " + n.var2 + "." +
                 KeyToText(n.key2);
        } else if constexpr (std::is_same_v<T, Condition::HasLabel>) {
          return KeyToText(n.label) + "(" + n.var + ")";
        } else if constexpr (std::is_same_v<T, Condition::Not>) {
          return "!" + CondAt(*n.inner, 2);
        } else if constexpr (std::is_same_v<T, Condition::And>) {
          return CondAt(*n.left, 1) + " & " + CondAt(*n.right, 2);
        } else {
          return CondAt(*n.left, 0) + " | " + CondAt(*n.right, 1);
        }
      },
      c.node);
}

std::string ToText(const Pattern& p) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Pattern::Node>) {
          return "(" + n.var + ")";
        } else if constexpr (std::is_same_v<T, Pattern::FwdEdge>) {
          return "-[" + n.var + "]->";
        } else if constexpr (std::is_same_v<T, Pattern::BwdEdge>) {
          return "<-[" + n.var + "]-";
        } else if constexpr (std::is_same_v<T, Pattern::Concat>) {
          return PatAt(*n.left, 1) + " " + PatAt(*n.right, 2);
        } else if constexpr (std::is_same_v<T, Pattern::Alt>) {
          return PatAt(*n.left, 0) + " | " + PatAt(*n.right, 1);
        } else if constexpr (std::is_same_v<T, Pattern::Repeat>) {
          return PatAt(*n.body, 2) + "{" + std::to_string(n.lo) + "," +
                 (n.hi ? std::to_string(*n.hi) : std::string("*")) + "}";
        } else {
          return PatAt(*n.body, 2) + " <" + ToText(*n.cond) + ">";
        }
      },
      p.node);
}

std::string ToText(const OutputPattern& op) {
  std::string out = ToText(*op.body) + " OUTPUT(";
  for (size_t i = 0; i < op.omega.size(); ++i) {
    if (i) out += ", ";
    out += op.omega[i].var;
    if (op.omega[i].key) out += "." + KeyToText(*op.omega[i].key);
  }
  return out + ")";
}

std::string ToText(const SelCond& c) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SelCond::ColEq>) {
          return "$" + std::to_string(n.left) + "=$" + std::to_string(n.right);
        } else if constexpr (std::is_same_v<T, SelCond::Not>) {
          return "!" + SelAt(*n.inner, 2);
        } else if constexpr (std::is_same_v<T, SelCond::And>) {
          return SelAt(*n.left, 1) + " & " + SelAt(*n.right, 2);
        } else {
          return SelAt(*n.left, 0) + " | " + SelAt(*n.right, 1);
        }
      },
      c.node);
}

std::string ToText(const Query& q) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Query::Rel>) {
          return "REL " + n.name;
        } else if constexpr (std::is_same_v<T, Query::Const>) {
          return "CONST " + n.value.ToString();
        } else if constexpr (std::is_same_v<T, Query::Project>) {
          std::string idx;
          for (size_t i = 0; i < n.indices.size(); ++i) {
            if (i) idx += ",";
            idx += std::to_string(n.indices[i]);
          }
          return "PI[" + idx + "](" + ToText(*n.input) + ")";
        } else if constexpr (std::is_same_v<T, Query::Select>) {
          return "SIGMA[" + ToText(*n.cond) + "](" + ToText(*n.input) + ")";
        } else if constexpr (std::is_same_v<T, Query::Product>) {
          return QueryAt(*n.left, 1) + " X " + QueryAt(*n.right, 2);
        } else if constexpr (std::is_same_v<T, Query::Union>) {
          return QueryAt(*n.left, 0) + " UNION " + QueryAt(*n.right, 1);
        } else if constexpr (std::is_same_v<T, Query::Diff>) {
          return QueryAt(*n.left, 0) + " MINUS " + QueryAt(*n.right, 1);
        } else if constexpr (std::is_same_v<T, Query::MatchRO>) {
          std::string out = "MATCH " + ToText(n.out) + " ON(";
          for (size_t i = 0; i < 6; ++i) out += (i ? "; " : "") + n.rels[i];
          return out + ")";
        } else if constexpr (std::is_same_v<T, Query::MatchRW> ||
                             std::is_same_v<T, Query::MatchEXT>) {
          std::string out = "MATCH " + ToText(n.out) + " ON(";
          for (size_t i = 0; i < 6; ++i) {
            out += (i ? "; " : "") + ToText(*n.subs[i]);
          }
          out += ")";
          if constexpr (std::is_same_v<T, Query::MatchEXT>) {
            out += " ARITY " + (n.declared_arity
                                    ? std::to_string(*n.declared_arity)
                                    : std::string("*"));
          }
          return out;
        } else {
          return "TCLOOP[" + std::to_string(n.k) + "," + std::to_string(n.l) +
                 "](" + ToText(*n.input) + ")";
        }
      },
      q.node);
}

std::string ToText(const Formula& f) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Formula::Atom>) {
          return n.rel + "(" + Join(n.vars) + ")";
        } else if constexpr (std::is_same_v<T, Formula::Eq>) {
          return n.left + " = " + n.right;
        } else if constexpr (std::is_same_v<T, Formula::EqConst>) {
          return n.var + " = " + n.value.ToString();
        } else if constexpr (std::is_same_v<T, Formula::Not>) {
          if (FormulaAtomic(*n.inner)) return "!" + ToText(*n.inner);
          return "!(" + ToText(*n.inner) + ")";
        } else if constexpr (std::is_same_v<T, Formula::And>) {
          return "(" + ToText(*n.left) + " & " + ToText(*n.right) + ")";
        } else if constexpr (std::is_same_v<T, Formula::Or>) {
          return "(" + ToText(*n.left) + " | " + ToText(*n.right) + ")";
        } else if constexpr (std::is_same_v<T, Formula::Exists>) {
          return "(E " + n.var + ". " + ToText(*n.body) + ")";
        } else if constexpr (std::is_same_v<T, Formula::Forall>) {
          return "(A " + n.var + ". " + ToText(*n.body) + ")";
        } else {
          return "TC[" + Join(n.u) + ";" + Join(n.v) + "](" +
                 ToText(*n.body) + ")(" + Join(n.x) + ";" + Join(n.y) + ")";
        }
      },
      f.node);
}

}  // namespace pgqlab
