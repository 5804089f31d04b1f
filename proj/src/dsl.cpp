#include "bihomega/dsl.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace bihomega {

void Workspace::add_algebra(const std::string& name, const AlgebraInstance& a) {
  semigroups.insert_or_assign(a.omega()->name(), a.omega());
  algebras.insert_or_assign(name, a);
}

bool operator==(const Workspace& a, const Workspace& b) {
  if (a.semigroups.size() != b.semigroups.size()) return false;
  for (auto ia = a.semigroups.begin(), ib = b.semigroups.begin(); ia != a.semigroups.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(*ia->second == *ib->second)) return false;
  }
  return a.algebras == b.algebras && a.families == b.families && a.rbs == b.rbs;
}

namespace {

std::string position(std::size_t line, std::size_t col) {
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string expected, std::string found)
    : Error(position(line, column) + ": expected " + expected + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

ResolutionError::ResolutionError(std::size_t line, std::size_t column, const std::string& message)
    : Error(position(line, column) + ": " + message), line_(line), column_(column) {}

namespace {

enum class Tok { Name, Int, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::Int:
      return "number '" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Name, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::string_view("{}()[],;:*=+-/").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), line, col});
      advance(1);
    } else {
      std::string shown = std::isprint(static_cast<unsigned char>(c)) ? std::string(1, c) : "byte " + std::to_string(
          static_cast<unsigned char>(c));
      throw ParseError(line, col, "a token", "'" + shown + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

struct Loc {
  std::size_t line = 0;
  std::size_t col = 0;
};

struct Named {
  std::string text;
  Loc loc;
};

struct TableEntry {
  Named a, b, c;
};

struct SemigroupDecl {
  Named name;
  std::vector<Named> elements;
  std::vector<TableEntry> table;
  bool commutative = false;
};

struct SumTerm {
  Rational coeff;
  std::size_t basis;  // 1-based
  Loc loc;
};

struct ProductEntry {
  Named a, b;
  std::size_t i, j;  // 1-based
  Loc i_loc, j_loc;
  std::vector<SumTerm> terms;
};

struct ProductDecl {
  Named role;
  std::vector<ProductEntry> entries;
};

struct MatrixEntry {
  Named element;
  std::vector<std::vector<Rational>> rows;
};

struct MapDecl {
  Named which;
  std::vector<MatrixEntry> entries;
};

struct AlgebraDecl {
  Named name;
  AlgebraKind kind;
  Named omega;
  std::size_t dim;
  Loc dim_loc;
  std::vector<ProductDecl> products;
  std::vector<MapDecl> maps;
};

struct FamilyDecl {
  Named name;
  Named algebra;
  std::optional<Rational> weight;
  Loc block;
  std::vector<MatrixEntry> entries;
};

struct Ast {
  std::vector<SemigroupDecl> semigroups;
  std::vector<AlgebraDecl> algebras;
  std::vector<FamilyDecl> families;
  std::vector<FamilyDecl> rbs;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Ast parse() {
    Ast ast;
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (is_word("semigroup")) {
        ast.semigroups.push_back(semigroup());
      } else if (is_word("algebra")) {
        ast.algebras.push_back(algebra());
      } else if (is_word("family")) {
        ast.families.push_back(family(false));
      } else if (is_word("rb")) {
        ast.rbs.push_back(family(true));
      } else {
        fail(t, "'semigroup', 'algebra', 'family' or 'rb'");
      }
    }
    return ast;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool is_word(std::string_view w) const { return peek().kind == Tok::Name && peek().text == w; }
  bool is_punct(char c) const { return peek().kind == Tok::Punct && peek().text[0] == c; }

  [[noreturn]] static void fail(const Token& t, const std::string& expected) {
    throw ParseError(t.line, t.col, expected, describe(t));
  }

  void expect_word(std::string_view w) {
    if (!is_word(w)) fail(peek(), "'" + std::string(w) + "'");
    next();
  }
  void expect(char c) {
    if (!is_punct(c)) fail(peek(), std::string("'") + c + "'");
    next();
  }
  Named name(const std::string& what = "a name") {
    if (peek().kind != Tok::Name) fail(peek(), what);
    const Token& t = next();
    return {t.text, {t.line, t.col}};
  }
  std::string integer(bool nonzero = false) {
    if (peek().kind != Tok::Int) fail(peek(), "an integer");
    if (nonzero && peek().text.find_first_not_of('0') == std::string::npos) fail(peek(), "a nonzero integer");
    return next().text;
  }
  // INT ['/' INT], the sign handled by the caller.
  Rational unsigned_rational() {
    std::string text = integer();
    if (is_punct('/')) {
      next();
      text += "/" + integer(true);
    }
    return Rational::parse(text);
  }
  Rational rational() {
    bool neg = false;
    if (is_punct('-')) {
      next();
      neg = true;
    }
    Rational r = unsigned_rational();
    return neg ? -r : r;
  }
  static std::optional<std::size_t> basis_index(const Token& t) {
    if (t.kind != Tok::Name || t.text.size() < 2 || t.text[0] != 'e') return std::nullopt;
    if (t.text.find_first_not_of("0123456789", 1) != std::string::npos) return std::nullopt;
    if (t.text[1] == '0' || t.text.size() > 6) return std::nullopt;
    return std::stoul(t.text.substr(1));
  }
  std::pair<std::size_t, Loc> basis() {
    const Token& t = peek();
    auto k = basis_index(t);
    if (!k) fail(t, "a basis vector (e1, e2, ...)");
    next();
    return {*k, {t.line, t.col}};
  }

  SemigroupDecl semigroup() {
    expect_word("semigroup");
    SemigroupDecl d;
    d.name = name();
    expect('{');
    expect_word("elements");
    d.elements.push_back(name("an element name"));
    while (peek().kind == Tok::Name) d.elements.push_back(name());
    expect(';');
    expect_word("table");
    expect('{');
    while (!is_punct('}')) {
      TableEntry e;
      e.a = name("an element name or '}'");
      expect('*');
      e.b = name("an element name");
      expect('=');
      e.c = name("an element name");
      expect(';');
      d.table.push_back(std::move(e));
    }
    expect('}');
    if (is_word("commutative")) {
      next();
      expect(';');
      d.commutative = true;
    }
    expect('}');
    return d;
  }

  std::vector<SumTerm> sum() {
    std::vector<SumTerm> terms;
    bool neg = false;
    if (is_punct('-')) {
      next();
      neg = true;
    }
    while (true) {
      const Token& start = peek();
      SumTerm t{1, 0, {start.line, start.col}};
      if (start.kind == Tok::Int) {
        t.coeff = unsigned_rational();
        if (basis_index(peek())) t.basis = basis().first;
      } else if (basis_index(start)) {
        t.basis = basis().first;
      } else {
        fail(start, "a coefficient or basis vector");
      }
      if (neg) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      if (is_punct('+')) {
        neg = false;
      } else if (is_punct('-')) {
        neg = true;
      } else {
        break;
      }
      next();
    }
    return terms;
  }

  ProductDecl product() {
    expect_word("product");
    ProductDecl d;
    d.role = name("a product role");
    expect('{');
    while (!is_punct('}')) {
      ProductEntry e;
      if (!is_punct('(')) fail(peek(), "'(' or '}'");
      next();
      e.a = name("an element name");
      expect(',');
      e.b = name("an element name");
      expect(')');
      expect(':');
      std::tie(e.i, e.i_loc) = basis();
      expect('*');
      std::tie(e.j, e.j_loc) = basis();
      expect('=');
      e.terms = sum();
      expect(';');
      d.entries.push_back(std::move(e));
    }
    expect('}');
    return d;
  }

  std::vector<std::vector<Rational>> matrix() {
    std::vector<std::vector<Rational>> rows;
    expect('[');
    while (true) {
      expect('[');
      std::vector<Rational> row{rational()};
      while (is_punct(',')) {
        next();
        row.push_back(rational());
      }
      expect(']');
      rows.push_back(std::move(row));
      if (!is_punct(',')) break;
      next();
    }
    expect(']');
    return rows;
  }

  std::vector<MatrixEntry> matrix_block() {
    std::vector<MatrixEntry> entries;
    expect('{');
    while (!is_punct('}')) {
      MatrixEntry e;
      e.element = name("an element name or '}'");
      expect(':');
      e.rows = matrix();
      expect(';');
      entries.push_back(std::move(e));
    }
    expect('}');
    return entries;
  }

  AlgebraDecl algebra() {
    expect_word("algebra");
    AlgebraDecl d;
    d.name = name();
    expect(':');
    const Token& kt = peek();
    std::optional<AlgebraKind> kind;
    if (kt.kind == Tok::Name) kind = kind_from_keyword(kt.text);
    if (!kind) fail(kt, "an algebra kind");
    next();
    d.kind = *kind;
    expect_word("over");
    d.omega = name("a semigroup name");
    expect_word("dim");
    d.dim_loc = {peek().line, peek().col};
    const std::string dim = integer(true);
    if (dim.size() > 4) fail(toks_[pos_ - 1], "a dimension below 10000");
    d.dim = std::stoul(dim);
    expect('{');
    while (!is_punct('}')) {
      if (is_word("product")) {
        d.products.push_back(product());
      } else if (is_word("map")) {
        next();
        MapDecl m;
        if (!is_word("p") && !is_word("q")) fail(peek(), "'p' or 'q'");
        m.which = name();
        m.entries = matrix_block();
        d.maps.push_back(std::move(m));
      } else {
        fail(peek(), "'product', 'map' or '}'");
      }
    }
    expect('}');
    return d;
  }

  FamilyDecl family(bool rb) {
    next();
    FamilyDecl d;
    d.name = name();
    expect_word("on");
    d.algebra = name("an algebra name");
    if (rb) {
      expect_word("weight");
      d.weight = rational();
    }
    d.block = {peek().line, peek().col};
    d.entries = matrix_block();
    return d;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

[[noreturn]] void unresolved(const Loc& l, const std::string& msg) { throw ResolutionError(l.line, l.col, msg); }

SemigroupPtr resolve_semigroup(const SemigroupDecl& d) {
  std::vector<std::string> labels;
  for (const auto& e : d.elements) {
    for (const auto& l : labels) {
      if (l == e.text) unresolved(e.loc, "element '" + e.text + "' listed twice");
    }
    labels.push_back(e.text);
  }
  const std::size_t n = labels.size();
  auto index = [&](const Named& x) {
    for (std::size_t i = 0; i < n; ++i) {
      if (labels[i] == x.text) return i;
    }
    unresolved(x.loc, "'" + x.text + "' is not an element of semigroup '" + d.name.text + "'");
  };
  std::vector<std::vector<std::optional<std::size_t>>> cells(n, std::vector<std::optional<std::size_t>>(n));
  for (const auto& e : d.table) {
    const std::size_t a = index(e.a);
    const std::size_t b = index(e.b);
    const std::size_t c = index(e.c);
    if (cells[a][b]) unresolved(e.a.loc, "product " + e.a.text + "*" + e.b.text + " given twice");
    cells[a][b] = c;
  }
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!cells[a][b]) {
        unresolved(d.name.loc, "semigroup '" + d.name.text + "' has no entry for " + labels[a] + "*" + labels[b]);
      }
      table[a][b] = *cells[a][b];
    }
  }
  auto s = std::make_shared<const SemigroupTable>(d.name.text, labels, std::move(table), d.commutative);
  const Verdict v = validate_semigroup(*s, CheckOptions{.max_witnesses = 1});
  for (const auto& r : v.reports) {
    if (r.passed()) continue;
    std::string msg = "semigroup '" + d.name.text + "' fails " + r.axiom;
    if (!r.witnesses.empty()) {
      msg += " at (";
      for (std::size_t i = 0; i < r.witnesses[0].omega.size(); ++i) {
        msg += (i ? ", " : "") + labels[r.witnesses[0].omega[i]];
      }
      msg += ")";
    }
    unresolved(d.name.loc, msg);
  }
  return s;
}

Matrix resolve_matrix(const MatrixEntry& e, std::size_t dim) {
  if (e.rows.size() != dim) {
    unresolved(e.element.loc, "matrix for '" + e.element.text + "' has " + std::to_string(e.rows.size()) +
                                  " rows, expected " + std::to_string(dim));
  }
  Matrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (e.rows[r].size() != dim) {
      unresolved(e.element.loc, "row " + std::to_string(r + 1) + " of the matrix for '" + e.element.text + "' has " +
                                    std::to_string(e.rows[r].size()) + " entries, expected " + std::to_string(dim));
    }
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = e.rows[r][c];
  }
  return m;
}

std::size_t element_index(const SemigroupTable& s, const Named& x) {
  auto i = s.index_of(x.text);
  if (!i) unresolved(x.loc, "'" + x.text + "' is not an element of semigroup '" + s.name() + "'");
  return *i;
}

LinearFamily resolve_family(const std::vector<MatrixEntry>& entries, const SemigroupPtr& s, std::size_t dim,
                            const Named& owner, const Loc& block) {
  std::vector<std::optional<Matrix>> maps(s->order());
  for (const auto& e : entries) {
    const std::size_t a = element_index(*s, e.element);
    if (maps[a]) unresolved(e.element.loc, "'" + e.element.text + "' given twice in '" + owner.text + "'");
    maps[a] = resolve_matrix(e, dim);
  }
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < s->order(); ++a) {
    if (!maps[a]) unresolved(block, "'" + owner.text + "' has no matrix for element '" + s->label(a) + "'");
    out.push_back(std::move(*maps[a]));
  }
  return LinearFamily(s, dim, std::move(out));
}

AlgebraInstance resolve_algebra(const AlgebraDecl& d, const Workspace& w) {
  auto it = w.semigroups.find(d.omega.text);
  if (it == w.semigroups.end()) unresolved(d.omega.loc, "no semigroup named '" + d.omega.text + "'");
  const SemigroupPtr& s = it->second;
  const auto roles = product_roles(d.kind);
  std::vector<std::optional<BilinearFamily>> products(roles.size());
  for (const auto& pd : d.products) {
    std::size_t r = roles.size();
    for (std::size_t i = 0; i < roles.size(); ++i) {
      if (roles[i] == pd.role.text) r = i;
    }
    if (r == roles.size()) {
      std::string allowed;
      for (const auto& x : roles) allowed += (allowed.empty() ? "" : ", ") + std::string(x);
      unresolved(pd.role.loc, "kind " + std::string(kind_keyword(d.kind)) + " has no product '" + pd.role.text +
                                  "' (roles: " + allowed + ")");
    }
    if (products[r]) unresolved(pd.role.loc, "product '" + pd.role.text + "' given twice");
    BilinearFamily f(s, d.dim);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& e : pd.entries) {
      const std::size_t a = element_index(*s, e.a);
      const std::size_t b = element_index(*s, e.b);
      for (auto [k, l] : {std::pair{e.i, e.i_loc}, std::pair{e.j, e.j_loc}}) {
        if (k > d.dim) unresolved(l, "e" + std::to_string(k) + " exceeds dimension " + std::to_string(d.dim));
      }
      if (!seen.insert({a, b, e.i, e.j}).second) {
        unresolved(e.a.loc, "(" + e.a.text + "," + e.b.text + "): e" + std::to_string(e.i) + "*e" +
                                std::to_string(e.j) + " given twice");
      }
      for (const auto& t : e.terms) {
        if (t.basis == 0) {
          if (!t.coeff.is_zero()) unresolved(t.loc, "a nonzero constant is not a vector");
          continue;
        }
        if (t.basis > d.dim) {
          unresolved(t.loc, "e" + std::to_string(t.basis) + " exceeds dimension " + std::to_string(d.dim));
        }
        f.at(a, b, e.i - 1, e.j - 1, t.basis - 1) += t.coeff;
      }
    }
    products[r] = std::move(f);
  }
  std::vector<BilinearFamily> prods;
  for (auto& p : products) prods.push_back(p ? std::move(*p) : BilinearFamily(s, d.dim));
  std::optional<LinearFamily> p;
  std::optional<LinearFamily> q;
  for (const auto& m : d.maps) {
    auto& slot = m.which.text == "p" ? p : q;
    if (slot) unresolved(m.which.loc, "map " + m.which.text + " given twice");
    slot = resolve_family(m.entries, s, d.dim, Named{"map " + m.which.text, m.which.loc}, m.which.loc);
  }
  try {
    return AlgebraInstance::make(d.kind, std::move(prods), p ? *p : LinearFamily::identity(s, d.dim),
                                 q ? *q : LinearFamily::identity(s, d.dim));
  } catch (const Error& e) {
    unresolved(d.name.loc, "algebra '" + d.name.text + "': " + e.what());
  }
}

Workspace resolve(const Ast& ast) {
  Workspace w;
  for (const auto& d : ast.semigroups) {
    if (w.semigroups.count(d.name.text)) unresolved(d.name.loc, "semigroup '" + d.name.text + "' defined twice");
    w.semigroups.emplace(d.name.text, resolve_semigroup(d));
  }
  for (const auto& d : ast.algebras) {
    if (w.algebras.count(d.name.text)) unresolved(d.name.loc, "algebra '" + d.name.text + "' defined twice");
    w.algebras.emplace(d.name.text, resolve_algebra(d, w));
  }
  auto target = [&](const FamilyDecl& d) -> const AlgebraInstance& {
    auto it = w.algebras.find(d.algebra.text);
    if (it == w.algebras.end()) unresolved(d.algebra.loc, "no algebra named '" + d.algebra.text + "'");
    return it->second;
  };
  for (const auto& d : ast.families) {
    if (w.families.count(d.name.text)) unresolved(d.name.loc, "family '" + d.name.text + "' defined twice");
    const auto& a = target(d);
    w.families.emplace(d.name.text,
                       Workspace::Family{d.algebra.text, resolve_family(d.entries, a.omega(), a.dim(), d.name, d.block)});
  }
  for (const auto& d : ast.rbs) {
    if (w.rbs.count(d.name.text)) unresolved(d.name.loc, "rb '" + d.name.text + "' defined twice");
    const auto& a = target(d);
    w.rbs.emplace(d.name.text,
                  Workspace::RotaBaxter{d.algebra.text,
                                        {resolve_family(d.entries, a.omega(), a.dim(), d.name, d.block), *d.weight}});
  }
  return w;
}

std::string coefficient_term(const Rational& c, std::size_t k, bool first) {
  std::string out;
  Rational mag = c;
  if (c.sign() < 0) {
    out = first ? "-" : " - ";
    mag = -c;
  } else if (!first) {
    out = " + ";
  }
  const std::string e = "e" + std::to_string(k + 1);
  return out + (mag.is_one() ? e : mag.str() + " " + e);
}

void write_family(std::ostringstream& os, const LinearFamily& f, const std::string& indent) {
  for (std::size_t a = 0; a < f.omega()->order(); ++a) {
    os << indent << f.omega()->label(a) << ": " << f[a].str() << ";\n";
  }
}

}  // namespace

std::string format_combination(std::span<const Rational> v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    out += coefficient_term(v[k], k, out.empty());
  }
  return out.empty() ? "0" : out;
}

Workspace parse_workspace(std::string_view text) { return resolve(Parser(lex(text)).parse()); }

std::string serialize_workspace(const Workspace& w) {
  std::ostringstream os;
  os << "# bihomega workspace v1\n";
  for (const auto& [name, s] : w.semigroups) {
    os << "\nsemigroup " << name << " {\n  elements";
    for (const auto& e : s->elements()) os << ' ' << e;
    os << ";\n  table {\n";
    for (std::size_t a = 0; a < s->order(); ++a) {
      os << "   ";
      for (std::size_t b = 0; b < s->order(); ++b) {
        os << ' ' << s->label(a) << '*' << s->label(b) << '=' << s->label((*s)(a, b)) << ';';
      }
      os << '\n';
    }
    os << "  }\n";
    if (s->commutative_flag()) os << "  commutative;\n";
    os << "}\n";
  }
  for (const auto& [name, a] : w.algebras) {
    const auto& s = *a.omega();
    os << "\nalgebra " << name << " : " << kind_keyword(a.kind()) << " over " << s.name() << " dim " << a.dim()
       << " {\n";
    const auto roles = product_roles(a.kind());
    for (std::size_t r = 0; r < roles.size(); ++r) {
      const auto& f = a.product(r);
      if (f.is_zero()) continue;
      os << "  product " << roles[r] << " {\n";
      for (std::size_t x = 0; x < s.order(); ++x) {
        for (std::size_t y = 0; y < s.order(); ++y) {
          for (std::size_t i = 0; i < a.dim(); ++i) {
            for (std::size_t j = 0; j < a.dim(); ++j) {
              const auto cell = f.cell(x, y, i, j);
              if (is_zero(cell)) continue;
              os << "    (" << s.label(x) << ',' << s.label(y) << "): e" << i + 1 << "*e" << j + 1 << " = "
                 << format_combination(cell) << ";\n";
            }
          }
        }
      }
      os << "  }\n";
    }
    for (const auto& [which, m] : {std::pair{"p", &a.p()}, std::pair{"q", &a.q()}}) {
      if (m->is_identity()) continue;
      os << "  map " << which << " {\n";
      write_family(os, *m, "    ");
      os << "  }\n";
    }
    os << "}\n";
  }
  for (const auto& [name, f] : w.families) {
    os << "\nfamily " << name << " on " << f.algebra << " {\n";
    write_family(os, f.maps, "  ");
    os << "}\n";
  }
  for (const auto& [name, r] : w.rbs) {
    os << "\nrb " << name << " on " << r.algebra << " weight " << r.family.weight.str() << " {\n";
    write_family(os, r.family.maps, "  ");
    os << "}\n";
  }
  return os.str();
}

}  // namespace bihomega
