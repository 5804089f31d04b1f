#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "bihomega/algebra.hpp"
#include "bihomega/errors.hpp"

namespace bihomega {

/// Named objects of one workspace file. Families and Rota-Baxter families
/// remember the algebra they were declared on.
struct Workspace {
  struct Family {
    std::string algebra;
    LinearFamily maps;
    friend bool operator==(const Family&, const Family&) = default;
  };
  struct RotaBaxter {
    std::string algebra;
    RotaBaxterFamily family;
    friend bool operator==(const RotaBaxter&, const RotaBaxter&) = default;
  };

  std::map<std::string, SemigroupPtr> semigroups;
  std::map<std::string, AlgebraInstance> algebras;
  std::map<std::string, Family> families;
  std::map<std::string, RotaBaxter> rbs;

  /// Adds `a` and its semigroup (by the semigroup's own name).
  void add_algebra(const std::string& name, const AlgebraInstance& a);

  friend bool operator==(const Workspace& a, const Workspace& b);
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string expected, std::string found);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }
  [[nodiscard]] const std::string& expected() const { return expected_; }
  [[nodiscard]] const std::string& found() const { return found_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
  std::string found_;
};

/// A well-formed file that names something undefined, repeats a name, or
/// describes an invalid object. The position is that of the offending name.
class ResolutionError : public Error {
 public:
  ResolutionError(std::size_t line, std::size_t column, const std::string& message);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Grammar (LL(1); whitespace and '#' comments are ignored):
///
///   workspace  := item*
///   item       := semigroup | algebra | family | rb
///   semigroup  := 'semigroup' NAME '{' 'elements' NAME+ ';'
///                 'table' '{' (NAME '*' NAME '=' NAME ';')* '}' ['commutative' ';'] '}'
///   algebra    := 'algebra' NAME ':' KIND 'over' NAME 'dim' INT '{' (product | map)* '}'
///   product    := 'product' ROLE '{' ('(' NAME ',' NAME ')' ':' BASIS '*' BASIS '=' sum ';')* '}'
///   map        := 'map' ('p' | 'q') '{' (NAME ':' matrix ';')* '}'
///   family     := 'family' NAME 'on' NAME '{' (NAME ':' matrix ';')* '}'
///   rb         := 'rb' NAME 'on' NAME 'weight' rational '{' (NAME ':' matrix ';')* '}'
///   sum        := ['-'] term (('+' | '-') term)*
///   term       := INT ['/' INT] [BASIS] | BASIS
///   matrix     := '[' row (',' row)* ']'     row := '[' rational (',' rational)* ']'
///   rational   := ['-'] INT ['/' INT]
///
/// BASIS is e1, e2, ... Omitted products are zero and omitted maps are
/// identities; a map or family block lists every semigroup element.
Workspace parse_workspace(std::string_view text);

/// Canonical text: header comment, then semigroups, algebras, families and
/// Rota-Baxter families, each sorted by name; only nonzero structure
/// constants; identity maps omitted.
std::string serialize_workspace(const Workspace& w);

/// "e1 - 1/2 e2", "0" for the zero vector.
std::string format_combination(std::span<const Rational> v);

}  // namespace bihomega
