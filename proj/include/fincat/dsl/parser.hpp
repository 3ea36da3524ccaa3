// Copyright 2026 The fincat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fincat/arrow_category.hpp"
#include "fincat/functor.hpp"
#include "fincat/induced.hpp"
#include "fincat/nullhomotopy.hpp"

namespace fincat::dsl {

struct Span {
  int line = 0;
  int column = 0;
};

struct ParseError {
  Span span;
  std::string message;
  std::string hint;
};

std::string format_error(const ParseError& e, const std::string& source);

/// Raised by parse_workspace; carries every error found.
class ParseFailure : public Error {
 public:
  explicit ParseFailure(std::vector<ParseError> errors, std::string source);
  const std::vector<ParseError>& errors() const { return errors_; }

 private:
  std::vector<ParseError> errors_;
};

struct NameList {
  std::vector<std::string> names;
  Span span;
};

struct ArrowDecl {
  std::string name, dom, cod;
  Span span;
};

struct CompositeDecl {
  std::string g, f, h;
  Span span;
};

struct CategoryDecl {
  std::string name;
  Span span;
  std::vector<std::string> objects;
  std::vector<ArrowDecl> arrows;
  std::vector<CompositeDecl> composites;
};

struct HomotopyDecl {
  std::string arrow;
  std::vector<std::string> labels;
  Span span;
};

/// `wl h p = r` and `wr p f = s`.
struct WhiskerDecl {
  bool left = true;
  std::string arrow, homotopy, result;
  Span span;
};

struct StructureDecl {
  std::string name, category;
  Span span;
  std::vector<HomotopyDecl> homotopies;
  std::vector<WhiskerDecl> whiskers;
};

struct IdealDecl {
  std::string name, category;
  NameList arrows;
  Span span;
};

struct PairDecl {
  std::string name, structure;
  NameList torsion, free;
  Span span;
};

struct SystemDecl {
  std::string name, category;
  NameList e, m;
  Span span;
};

struct FunctorDecl {
  std::string name, src, dst;
  Span span;
  std::vector<std::pair<std::string, std::string>> map;
  std::vector<Span> map_spans;
};

struct TransformationDecl {
  std::string name, source, target;
  Span span;
  std::vector<std::pair<std::string, std::string>> components;
  std::vector<Span> component_spans;
};

struct AdjunctionDecl {
  std::string name, left, right, unit, counit;
  Span span;
};

/// `induced S from preradical t`, `from precoradical t`,
/// `from pair t s` or `from subcategory CAT {a b}`.
struct InducedDecl {
  std::string name;
  InducedMode mode = InducedMode::preradical;
  std::string first, second;
  NameList objects;
  Span span;
};

enum class DeclKind { category, structure, ideal, pair, system, functor, transformation, adjunction, induced };

struct Workspace {
  std::string source;
  std::vector<std::pair<DeclKind, std::size_t>> order;
  std::vector<CategoryDecl> category_decls;
  std::vector<StructureDecl> structure_decls;
  std::vector<IdealDecl> ideal_decls;
  std::vector<PairDecl> pair_decls;
  std::vector<SystemDecl> system_decls;
  std::vector<FunctorDecl> functor_decls;
  std::vector<TransformationDecl> transformation_decls;
  std::vector<AdjunctionDecl> adjunction_decls;
  std::vector<InducedDecl> induced_decls;
  std::vector<std::string> warnings;

  std::map<std::string, CategoryPtr> categories;
  std::map<std::string, std::shared_ptr<const NullStructure>> structures;
  std::map<std::string, Subset> ideals;
  std::map<std::string, Functor> functors;
  std::map<std::string, NatTrans> transformations;
  std::map<std::string, Adjunction> adjunctions;
  std::map<std::string, InducedStructure> induced;
  /// Pairs and systems after closure under isomorphism.
  std::map<std::string, Subset> pair_torsion, pair_free;
  std::map<std::string, Subset> system_e, system_m;

  /// Declared or derived structure: NAME, h(CAT), z1(CAT), disc(IDEAL),
  /// zero(CAT). Throws Error for unknown names.
  std::shared_ptr<const NullStructure> structure(const std::string& ref) const;
  CategoryPtr category(const std::string& name) const;
  /// The Arr(A) workspace of a declared category, built on first use.
  std::shared_ptr<const ArrWorkspace> arr(const std::string& category) const;

 private:
  mutable std::map<std::string, std::shared_ptr<const ArrWorkspace>> arr_cache_;
  mutable std::map<std::string, std::shared_ptr<const NullStructure>> derived_cache_;
};

/// Parses and elaborates the line format; throws ParseFailure with every
/// error and no partial workspace.
std::shared_ptr<Workspace> parse_workspace(std::string_view text, const std::string& source = "<input>");
std::shared_ptr<Workspace> parse_file(const std::string& path);

}  // namespace fincat::dsl
