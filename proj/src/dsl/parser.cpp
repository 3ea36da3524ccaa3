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

#include "fincat/dsl/parser.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "fincat/ideal.hpp"
#include "fincat/limits.hpp"

namespace fincat::dsl {

std::string format_error(const ParseError& e, const std::string& source) {
  std::string out = source + ":" + std::to_string(e.span.line) + ":" + std::to_string(e.span.column) + ": error: " +
                    e.message;
  if (!e.hint.empty()) out += " (hint: " + e.hint + ")";
  return out;
}

namespace {

std::string join_errors(const std::vector<ParseError>& errors, const std::string& source) {
  std::string out;
  for (const auto& e : errors) {
    if (!out.empty()) out += "\n";
    out += format_error(e, source);
  }
  return out;
}

}  // namespace

ParseFailure::ParseFailure(std::vector<ParseError> errors, std::string source)
    : Error(join_errors(errors, source)), errors_(std::move(errors)) {}

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char ch = line[i];
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '{' || ch == '}' || ch == ':') {
      out.push_back({std::string(1, ch), static_cast<int>(i) + 1});
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '{' &&
           line[i] != '}' && line[i] != ':' && line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

enum class Block { none, category, structure, functor, transformation };

class Parser {
 public:
  explicit Parser(Workspace& ws) : ws_(ws) {}

  void line(int number, const std::string& text) {
    line_ = number;
    toks_ = tokenize(text);
    if (toks_.empty()) return;
    const std::string& kw = toks_[0].text;
    try {
      if (kw == "category") category();
      else if (kw == "objects") objects();
      else if (kw == "arrow") arrow();
      else if (kw == "compose") compose();
      else if (kw == "nullhomotopy") structure();
      else if (kw == "homotopies") homotopies();
      else if (kw == "wl" || kw == "wr") whisker(kw == "wl");
      else if (kw == "ideal") ideal();
      else if (kw == "pair") pair();
      else if (kw == "system") system();
      else if (kw == "functor") functor();
      else if (kw == "map") map();
      else if (kw == "transformation") transformation();
      else if (kw == "component") component();
      else if (kw == "adjunction") adjunction();
      else if (kw == "induced") induced();
      else
        fail(0, "unknown declaration '" + kw + "'",
             "declarations start with category, objects, arrow, compose, nullhomotopy, homotopies, wl, wr, ideal, "
             "pair, system, functor, map, transformation, component, adjunction or induced");
    } catch (const Abort&) {
    }
  }

  std::vector<ParseError> errors;

 private:
  struct Abort {};

  [[noreturn]] void fail(std::size_t tok, const std::string& msg, const std::string& hint) {
    int col = tok < toks_.size() ? toks_[tok].column : (toks_.empty() ? 1 : toks_.back().column);
    errors.push_back({{line_, col}, msg, hint});
    throw Abort{};
  }

  Span span(std::size_t tok = 0) const { return {line_, tok < toks_.size() ? toks_[tok].column : 1}; }

  const std::string& word(std::size_t i, const std::string& usage) {
    if (i >= toks_.size()) fail(i, "missing operand", "expected `" + usage + "`");
    const std::string& t = toks_[i].text;
    if (t == "{" || t == "}" || t == ":") fail(i, "unexpected '" + t + "'", "expected `" + usage + "`");
    return t;
  }

  void expect(std::size_t i, const std::string& lit, const std::string& usage) {
    if (i >= toks_.size() || toks_[i].text != lit) fail(i, "expected '" + lit + "'", "write `" + usage + "`");
  }

  void end(std::size_t i, const std::string& usage) {
    if (i != toks_.size()) fail(i, "unexpected trailing text", "write `" + usage + "`");
  }

  NameList names(std::size_t& i, const std::string& usage) {
    expect(i, "{", usage);
    NameList out;
    out.span = span(i);
    ++i;
    while (i < toks_.size() && toks_[i].text != "}") {
      if (toks_[i].text == "{" || toks_[i].text == ":") fail(i, "unexpected '" + toks_[i].text + "'", usage);
      out.names.push_back(toks_[i].text);
      ++i;
    }
    if (i >= toks_.size()) fail(i, "unterminated set", "close the set with '}'");
    ++i;
    return out;
  }

  void new_name(const std::string& name, std::size_t tok) {
    if (!top_names_.insert(name).second)
      fail(tok, "duplicate name '" + name + "'", "every top-level declaration needs a distinct name");
  }

  void open(DeclKind k, std::size_t index, Block b) {
    ws_.order.emplace_back(k, index);
    block_ = b;
  }

  CategoryDecl& current_category(const std::string& kw) {
    if (block_ != Block::category) fail(0, "'" + kw + "' outside a category", "start a block with `category NAME`");
    return ws_.category_decls.back();
  }

  void category() {
    const std::string usage = "category NAME";
    const std::string& n = word(1, usage);
    end(2, usage);
    new_name(n, 1);
    ws_.category_decls.push_back({n, span(), {}, {}, {}});
    open(DeclKind::category, ws_.category_decls.size() - 1, Block::category);
  }

  void objects() {
    auto& c = current_category("objects");
    if (toks_.size() < 2) fail(1, "no objects listed", "write `objects a b c`");
    for (std::size_t i = 1; i < toks_.size(); ++i) c.objects.push_back(word(i, "objects a b c"));
  }

  void arrow() {
    const std::string usage = "arrow f : a -> b";
    auto& c = current_category("arrow");
    std::string n = word(1, usage);
    expect(2, ":", usage);
    std::string d = word(3, usage);
    expect(4, "->", usage);
    std::string cd = word(5, usage);
    end(6, usage);
    c.arrows.push_back({n, d, cd, span()});
  }

  void compose() {
    const std::string usage = "compose g f = h";
    auto& c = current_category("compose");
    std::string g = word(1, usage), f = word(2, usage);
    expect(3, "=", usage);
    std::string h = word(4, usage);
    end(5, usage);
    c.composites.push_back({g, f, h, span()});
  }

  void structure() {
    const std::string usage = "nullhomotopy T on CATEGORY";
    std::string n = word(1, usage);
    expect(2, "on", usage);
    std::string c = word(3, usage);
    end(4, usage);
    new_name(n, 1);
    ws_.structure_decls.push_back({n, c, span(), {}, {}});
    open(DeclKind::structure, ws_.structure_decls.size() - 1, Block::structure);
  }

  StructureDecl& current_structure(const std::string& kw) {
    if (block_ != Block::structure)
      fail(0, "'" + kw + "' outside a nullhomotopy block", "start a block with `nullhomotopy T on CATEGORY`");
    return ws_.structure_decls.back();
  }

  void homotopies() {
    const std::string usage = "homotopies f : p q";
    auto& s = current_structure("homotopies");
    std::string a = word(1, usage);
    expect(2, ":", usage);
    HomotopyDecl h{a, {}, span()};
    for (std::size_t i = 3; i < toks_.size(); ++i) h.labels.push_back(word(i, usage));
    s.homotopies.push_back(std::move(h));
  }

  void whisker(bool left) {
    const std::string usage = left ? "wl h p = r" : "wr p f = s";
    auto& s = current_structure(left ? "wl" : "wr");
    std::string a = word(1, usage), b = word(2, usage);
    expect(3, "=", usage);
    std::string r = word(4, usage);
    end(5, usage);
    if (left)
      s.whiskers.push_back({true, a, b, r, span()});
    else
      s.whiskers.push_back({false, b, a, r, span()});
  }

  void ideal() {
    const std::string usage = "ideal Z on CATEGORY = {f g}";
    std::string n = word(1, usage);
    expect(2, "on", usage);
    std::string c = word(3, usage);
    expect(4, "=", usage);
    std::size_t i = 5;
    NameList arrows = names(i, usage);
    end(i, usage);
    new_name(n, 1);
    ws_.ideal_decls.push_back({n, c, arrows, span()});
    open(DeclKind::ideal, ws_.ideal_decls.size() - 1, Block::none);
  }

  void pair() {
    const std::string usage = "pair P on STRUCTURE torsion {..} free {..}";
    std::string n = word(1, usage);
    expect(2, "on", usage);
    std::string s = word(3, usage);
    expect(4, "torsion", usage);
    std::size_t i = 5;
    NameList t = names(i, usage);
    expect(i, "free", usage);
    ++i;
    NameList f = names(i, usage);
    end(i, usage);
    new_name(n, 1);
    ws_.pair_decls.push_back({n, s, t, f, span()});
    open(DeclKind::pair, ws_.pair_decls.size() - 1, Block::none);
  }

  void system() {
    const std::string usage = "system S on CATEGORY e {..} m {..}";
    std::string n = word(1, usage);
    expect(2, "on", usage);
    std::string c = word(3, usage);
    expect(4, "e", usage);
    std::size_t i = 5;
    NameList e = names(i, usage);
    expect(i, "m", usage);
    ++i;
    NameList m = names(i, usage);
    end(i, usage);
    new_name(n, 1);
    ws_.system_decls.push_back({n, c, e, m, span()});
    open(DeclKind::system, ws_.system_decls.size() - 1, Block::none);
  }

  void functor() {
    const std::string usage = "functor F : A -> B";
    std::string n = word(1, usage);
    expect(2, ":", usage);
    std::string a = word(3, usage);
    expect(4, "->", usage);
    std::string b = word(5, usage);
    end(6, usage);
    new_name(n, 1);
    ws_.functor_decls.push_back({n, a, b, span(), {}, {}});
    open(DeclKind::functor, ws_.functor_decls.size() - 1, Block::functor);
  }

  void map() {
    const std::string usage = "map x = y";
    if (block_ != Block::functor) fail(0, "'map' outside a functor block", "start a block with `functor F : A -> B`");
    std::string x = word(1, usage);
    expect(2, "=", usage);
    std::string y = word(3, usage);
    end(4, usage);
    ws_.functor_decls.back().map.emplace_back(x, y);
    ws_.functor_decls.back().map_spans.push_back(span());
  }

  void transformation() {
    const std::string usage = "transformation t : F => G";
    std::string n = word(1, usage);
    expect(2, ":", usage);
    std::string f = word(3, usage);
    expect(4, "=>", usage);
    std::string g = word(5, usage);
    end(6, usage);
    new_name(n, 1);
    ws_.transformation_decls.push_back({n, f, g, span(), {}, {}});
    open(DeclKind::transformation, ws_.transformation_decls.size() - 1, Block::transformation);
  }

  void component() {
    const std::string usage = "component x = f";
    if (block_ != Block::transformation)
      fail(0, "'component' outside a transformation block", "start a block with `transformation t : F => G`");
    std::string x = word(1, usage);
    expect(2, "=", usage);
    std::string f = word(3, usage);
    end(4, usage);
    ws_.transformation_decls.back().components.emplace_back(x, f);
    ws_.transformation_decls.back().component_spans.push_back(span());
  }

  void adjunction() {
    const std::string usage = "adjunction NAME : L -| R unit t counit s";
    std::string n = word(1, usage);
    expect(2, ":", usage);
    std::string l = word(3, usage);
    expect(4, "-|", usage);
    std::string r = word(5, usage);
    expect(6, "unit", usage);
    std::string u = word(7, usage);
    expect(8, "counit", usage);
    std::string c = word(9, usage);
    end(10, usage);
    new_name(n, 1);
    ws_.adjunction_decls.push_back({n, l, r, u, c, span()});
    open(DeclKind::adjunction, ws_.adjunction_decls.size() - 1, Block::none);
  }

  void induced() {
    const std::string usage =
        "induced S from preradical t | precoradical t | pair gamma beta | subcategory CATEGORY {a b}";
    std::string n = word(1, usage);
    expect(2, "from", usage);
    std::string mode = word(3, usage);
    InducedDecl d;
    d.name = n;
    d.span = span();
    std::size_t i = 5;
    if (mode == "preradical" || mode == "precoradical") {
      d.mode = mode == "preradical" ? InducedMode::preradical : InducedMode::precoradical;
      d.first = word(4, usage);
    } else if (mode == "pair") {
      d.mode = InducedMode::pair;
      d.first = word(4, usage);
      d.second = word(5, usage);
      i = 6;
    } else if (mode == "subcategory") {
      d.mode = InducedMode::subcategory;
      d.first = word(4, usage);
      d.objects = names(i, usage);
    } else {
      fail(3, "unknown induction mode '" + mode + "'", usage);
    }
    end(i, usage);
    new_name(n, 1);
    ws_.induced_decls.push_back(std::move(d));
    open(DeclKind::induced, ws_.induced_decls.size() - 1, Block::none);
  }

  Workspace& ws_;
  int line_ = 0;
  std::vector<Token> toks_;
  Block block_ = Block::none;
  std::set<std::string> top_names_;
};

/// Turns declarations into checked objects.
class Elaborator {
 public:
  explicit Elaborator(Workspace& ws) : ws_(ws) {}
  std::vector<ParseError> errors;

  void run() {
    for (auto [kind, index] : ws_.order) {
      try {
        switch (kind) {
          case DeclKind::category:
            category(ws_.category_decls[index]);
            break;
          case DeclKind::structure:
            structure(ws_.structure_decls[index]);
            break;
          case DeclKind::ideal:
            ideal(ws_.ideal_decls[index]);
            break;
          case DeclKind::pair:
            pair(ws_.pair_decls[index]);
            break;
          case DeclKind::system:
            system(ws_.system_decls[index]);
            break;
          case DeclKind::functor:
            functor(ws_.functor_decls[index]);
            break;
          case DeclKind::transformation:
            transformation(ws_.transformation_decls[index]);
            break;
          case DeclKind::adjunction:
            adjunction(ws_.adjunction_decls[index]);
            break;
          case DeclKind::induced:
            induced(ws_.induced_decls[index]);
            break;
        }
      } catch (const Abort&) {
      }
    }
  }

 private:
  struct Abort {};

  [[noreturn]] void fail(Span s, const std::string& msg, const std::string& hint) {
    errors.push_back({s, msg, hint});
    throw Abort{};
  }

  CategoryPtr need_category(const std::string& name, Span s) {
    auto it = ws_.categories.find(name);
    if (it == ws_.categories.end()) fail(s, "unknown category '" + name + "'", "declare it with `category " + name + "`");
    return it->second;
  }

  ObjectId need_object(const Category& c, const std::string& name, Span s) {
    auto x = c.find_object(name);
    if (!x) fail(s, "unknown object '" + name + "' in " + c.name(), "objects are declared with `objects`");
    return *x;
  }

  ArrowId need_arrow(const Category& c, const std::string& name, Span s) {
    auto a = c.find_arrow(name);
    if (!a) fail(s, "unknown arrow '" + name + "' in " + c.name(), "identities are written id_<object>");
    return *a;
  }

  void category(const CategoryDecl& d) {
    Category::Builder b(d.name);
    std::set<std::string> seen;
    for (const auto& o : d.objects) {
      if (!seen.insert(o).second) fail(d.span, "duplicate object '" + o + "'", "object names must be distinct");
      b.add_object(o);
    }
    std::map<std::string, ArrowId> arrows;
    std::vector<ObjectId> dom, cod;
    for (const auto& o : d.objects) {
      arrows["id_" + o] = static_cast<int>(arrows.size());
      dom.push_back(static_cast<int>(dom.size()));
      cod.push_back(static_cast<int>(cod.size()));
    }
    auto object_of = [&](const std::string& n, Span s) -> ObjectId {
      for (std::size_t i = 0; i < d.objects.size(); ++i)
        if (d.objects[i] == n) return static_cast<int>(i);
      fail(s, "unknown object '" + n + "'", "list it in the `objects` line first");
    };
    for (const auto& a : d.arrows) {
      ObjectId x = object_of(a.dom, a.span), y = object_of(a.cod, a.span);
      if (arrows.count(a.name)) fail(a.span, "duplicate arrow '" + a.name + "'", "arrow names must be distinct");
      arrows[a.name] = b.add_arrow(a.name, x, y);
      dom.push_back(x);
      cod.push_back(y);
    }
    auto arrow_of = [&](const std::string& n, Span s) -> ArrowId {
      auto it = arrows.find(n);
      if (it == arrows.end()) fail(s, "unknown arrow '" + n + "'", "declare it with `arrow " + n + " : a -> b`");
      return it->second;
    };
    std::set<std::pair<ArrowId, ArrowId>> given;
    for (const auto& c : d.composites) {
      ArrowId g = arrow_of(c.g, c.span), f = arrow_of(c.f, c.span), h = arrow_of(c.h, c.span);
      if (cod[f] != dom[g])
        fail(c.span, "cannot compose " + c.g + " after " + c.f + ": codomain of " + c.f + " is not the domain of " + c.g,
             "`compose g f = h` needs cod(f) = dom(g)");
      if (dom[h] != dom[f] || cod[h] != cod[g])
        fail(c.span, "composite " + c.h + " has the wrong domain or codomain",
             "the composite of " + c.g + " and " + c.f + " must run from dom(" + c.f + ") to cod(" + c.g + ")");
      if (!given.emplace(g, f).second) fail(c.span, "composite of " + c.g + " " + c.f + " given twice", "keep one line");
      b.set_composite(g, f, h);
    }
    std::size_t n = d.objects.size();
    std::vector<std::string> names(arrows.size());
    for (const auto& [k, v] : arrows) names[v] = k;
    for (std::size_t g = n; g < dom.size(); ++g)
      for (std::size_t f = n; f < dom.size(); ++f)
        if (cod[f] == dom[g] && !given.count({static_cast<int>(g), static_cast<int>(f)}))
          fail(d.span, "missing composite of " + names[g] + " after " + names[f] + " in " + d.name,
               "add `compose " + names[g] + " " + names[f] + " = ...`");
    try {
      ws_.categories[d.name] = std::make_shared<const Category>(b.build());
    } catch (const Error& e) {
      fail(d.span, e.what(), "check the arrow and composite declarations");
    }
  }

  void structure(const StructureDecl& d) {
    CategoryPtr c = need_category(d.category, d.span);
    NullStructure::Builder b(c, d.name);
    std::map<std::string, HomotopyId> labels;
    for (const auto& h : d.homotopies) {
      ArrowId a = need_arrow(*c, h.arrow, h.span);
      for (const auto& l : h.labels) {
        if (labels.count(l)) fail(h.span, "duplicate homotopy '" + l + "'", "homotopy labels are unique per structure");
        labels[l] = b.add_homotopy(a, l);
      }
    }
    auto label_of = [&](const std::string& n, Span s) {
      auto it = labels.find(n);
      if (it == labels.end()) fail(s, "unknown homotopy '" + n + "'", "declare it with `homotopies f : " + n + "`");
      return it->second;
    };
    for (const auto& w : d.whiskers) {
      ArrowId a = need_arrow(*c, w.arrow, w.span);
      HomotopyId p = label_of(w.homotopy, w.span), r = label_of(w.result, w.span);
      ArrowId carrier = b.carrier(p);
      if (w.left) {
        if (c->dom(a) != c->cod(carrier))
          fail(w.span, "cannot whisker " + w.homotopy + " by " + w.arrow + " on the left",
               "`wl h p = r` needs dom(h) = cod of the arrow carrying p");
        b.set_left(a, p, r);
      } else {
        if (c->cod(a) != c->dom(carrier))
          fail(w.span, "cannot whisker " + w.homotopy + " by " + w.arrow + " on the right",
               "`wr p f = s` needs cod(f) = dom of the arrow carrying p");
        b.set_right(p, a, r);
      }
    }
    ws_.structures[d.name] = std::make_shared<const NullStructure>(b.build());
  }

  Subset arrow_set(const Category& c, const NameList& l) {
    Subset s(c.arrow_count());
    for (const auto& n : l.names) s.insert(need_arrow(c, n, l.span));
    return s;
  }

  Subset object_set(const Category& c, const NameList& l) {
    Subset s(c.object_count());
    for (const auto& n : l.names) s.insert(need_object(c, n, l.span));
    return s;
  }

  void ideal(const IdealDecl& d) {
    CategoryPtr c = need_category(d.category, d.span);
    ws_.ideals[d.name] = arrow_set(*c, d.arrows);
  }

  Subset close_objects(const Category& c, const Subset& s, const std::string& what, Span span) {
    Subset closed = c.iso_closure_objects(s);
    if (!(closed == s))
      ws_.warnings.push_back(ws_.source + ":" + std::to_string(span.line) + ": " + what +
                             " closed under isomorphism");
    return closed;
  }

  Subset close_arrows(const Category& c, const Subset& s, const std::string& what, Span span) {
    Subset closed = c.iso_closure_arrows(s);
    if (!(closed == s))
      ws_.warnings.push_back(ws_.source + ":" + std::to_string(span.line) + ": " + what +
                             " closed under isomorphism");
    return closed;
  }

  void pair(const PairDecl& d) {
    std::shared_ptr<const NullStructure> s;
    try {
      s = ws_.structure(d.structure);
    } catch (const CapExceeded&) {
      throw;
    } catch (const Error& e) {
      fail(d.span, e.what(), "use a declared structure or h(CAT), z1(CAT), disc(IDEAL), zero(CAT)");
    }
    const Category& c = s->base();
    ws_.pair_torsion[d.name] = close_objects(c, object_set(c, d.torsion), "torsion class of " + d.name, d.span);
    ws_.pair_free[d.name] = close_objects(c, object_set(c, d.free), "free class of " + d.name, d.span);
  }

  void system(const SystemDecl& d) {
    CategoryPtr c = need_category(d.category, d.span);
    ws_.system_e[d.name] = close_arrows(*c, arrow_set(*c, d.e), "class E of " + d.name, d.span);
    ws_.system_m[d.name] = close_arrows(*c, arrow_set(*c, d.m), "class M of " + d.name, d.span);
  }

  const Functor& need_functor(const std::string& ref, Span s) {
    if (ref.rfind("id(", 0) == 0 && ref.back() == ')') {
      std::string cat = ref.substr(3, ref.size() - 4);
      auto key = "id(" + cat + ")";
      if (!ws_.functors.count(key)) ws_.functors.emplace(key, identity_functor(need_category(cat, s)));
      return ws_.functors.at(key);
    }
    auto it = ws_.functors.find(ref);
    if (it == ws_.functors.end()) fail(s, "unknown functor '" + ref + "'", "declare it with `functor " + ref + " : A -> B`");
    return it->second;
  }

  void functor(const FunctorDecl& d) {
    CategoryPtr a = need_category(d.src, d.span), b = need_category(d.dst, d.span);
    Functor f{d.name, a, b, std::vector<ObjectId>(a->object_count(), kNone),
              std::vector<ArrowId>(a->arrow_count(), kNone)};
    for (std::size_t i = 0; i < d.map.size(); ++i) {
      const auto& [x, y] = d.map[i];
      Span s = d.map_spans[i];
      if (auto o = a->find_object(x)) {
        f.obj[*o] = need_object(*b, y, s);
      } else if (auto g = a->find_arrow(x)) {
        f.arr[*g] = need_arrow(*b, y, s);
      } else {
        fail(s, "'" + x + "' is neither an object nor an arrow of " + d.src, "map objects and arrows of the source");
      }
    }
    for (std::size_t x = 0; x < a->object_count(); ++x) {
      if (f.obj[x] == kNone)
        fail(d.span, "functor " + d.name + " does not map object " + a->object_name(static_cast<int>(x)),
             "add `map " + a->object_name(static_cast<int>(x)) + " = ...`");
      if (f.arr[a->identity(static_cast<int>(x))] == kNone)
        f.arr[a->identity(static_cast<int>(x))] = b->identity(f.obj[x]);
    }
    for (std::size_t g = 0; g < a->arrow_count(); ++g)
      if (f.arr[g] == kNone)
        fail(d.span, "functor " + d.name + " does not map arrow " + a->arrow_name(static_cast<int>(g)),
             "add `map " + a->arrow_name(static_cast<int>(g)) + " = ...`");
    ws_.functors[d.name] = std::move(f);
  }

  void transformation(const TransformationDecl& d) {
    const Functor& f = need_functor(d.source, d.span);
    const Functor& g = need_functor(d.target, d.span);
    if (f.src != g.src || f.dst != g.dst)
      fail(d.span, "functors " + d.source + " and " + d.target + " are not parallel",
           "both functors need the same source and target");
    const Category& a = *f.src;
    const Category& b = *f.dst;
    NatTrans t{d.name, f, g, std::vector<ArrowId>(a.object_count(), kNone)};
    for (std::size_t i = 0; i < d.components.size(); ++i) {
      const auto& [x, h] = d.components[i];
      t.component[need_object(a, x, d.component_spans[i])] = need_arrow(b, h, d.component_spans[i]);
    }
    for (std::size_t x = 0; x < a.object_count(); ++x)
      if (t.component[x] == kNone)
        fail(d.span, "transformation " + d.name + " has no component at " + a.object_name(static_cast<int>(x)),
             "add `component " + a.object_name(static_cast<int>(x)) + " = ...`");
    ws_.transformations[d.name] = std::move(t);
  }

  const NatTrans& need_transformation(const std::string& ref, Span s) {
    auto it = ws_.transformations.find(ref);
    if (it == ws_.transformations.end())
      fail(s, "unknown transformation '" + ref + "'", "declare it with `transformation " + ref + " : F => G`");
    return it->second;
  }

  void adjunction(const AdjunctionDecl& d) {
    ws_.adjunctions[d.name] = Adjunction{d.name, need_functor(d.left, d.span), need_functor(d.right, d.span),
                                         need_transformation(d.unit, d.span), need_transformation(d.counit, d.span)};
  }

  void induced(const InducedDecl& d) {
    auto typed = [&](const NatTrans& t) {
      auto diags = verify_nat_trans(t);
      if (!diags.empty())
        fail(d.span, "transformation " + t.name + " is not natural: " + diags.front().message,
             "fix the components before inducing a structure");
    };
    std::optional<InducedStructure> s;
    try {
      switch (d.mode) {
        case InducedMode::preradical: {
          const NatTrans& t = need_transformation(d.first, d.span);
          typed(t);
          s.emplace(induce_from_preradical(t, d.name));
          break;
        }
        case InducedMode::precoradical: {
          const NatTrans& t = need_transformation(d.first, d.span);
          typed(t);
          s.emplace(induce_from_precoradical(t, d.name));
          break;
        }
        case InducedMode::pair: {
          const NatTrans& g = need_transformation(d.first, d.span);
          const NatTrans& b = need_transformation(d.second, d.span);
          typed(g);
          typed(b);
          s.emplace(induce_from_pair(g, b, d.name));
          break;
        }
        case InducedMode::subcategory: {
          CategoryPtr c = need_category(d.first, d.span);
          Subset objs = close_objects(*c, object_set(*c, d.objects), "subcategory of " + d.name, d.span);
          auto sub = full_subcategory(*c, objs, d.name + "_sub");
          s.emplace(induce_from_subcategory(inclusion(sub, c), d.name));
          break;
        }
      }
    } catch (const Abort&) {
      throw;
    } catch (const CapExceeded&) {
      throw;
    } catch (const Error& e) {
      fail(d.span, e.what(), "check the functorial data");
    }
    ws_.structures[d.name] = std::make_shared<const NullStructure>(s->structure);
    ws_.induced.emplace(d.name, std::move(*s));
  }

  Workspace& ws_;
};

std::pair<std::string, std::string> split_call(const std::string& ref) {
  auto open = ref.find('(');
  if (open == std::string::npos || ref.back() != ')') return {"", ref};
  return {ref.substr(0, open), ref.substr(open + 1, ref.size() - open - 2)};
}

}  // namespace

CategoryPtr Workspace::category(const std::string& name) const {
  auto it = categories.find(name);
  if (it == categories.end()) throw Error("unknown category '" + name + "'");
  return it->second;
}

std::shared_ptr<const ArrWorkspace> Workspace::arr(const std::string& name) const {
  auto it = arr_cache_.find(name);
  if (it != arr_cache_.end()) return it->second;
  auto w = std::make_shared<const ArrWorkspace>(build_arr(category(name)));
  arr_cache_[name] = w;
  return w;
}

std::shared_ptr<const NullStructure> Workspace::structure(const std::string& ref) const {
  if (auto it = structures.find(ref); it != structures.end()) return it->second;
  if (auto it = derived_cache_.find(ref); it != derived_cache_.end()) return it->second;
  auto [fn, arg] = split_call(ref);
  std::shared_ptr<const NullStructure> s;
  if (fn == "h") {
    auto w = arr(arg);
    s = std::shared_ptr<const NullStructure>(w, &w->H());
  } else if (fn == "z1") {
    auto w = arr(arg);
    s = std::make_shared<const NullStructure>(discrete_structure(w->arr, w->z1, ref));
  } else if (fn == "disc") {
    auto it = ideals.find(arg);
    if (it == ideals.end()) throw Error("unknown ideal '" + arg + "'");
    CategoryPtr c;
    for (const auto& d : ideal_decls)
      if (d.name == arg) c = category(d.category);
    if (!is_ideal(*c, it->second)) throw Error("'" + arg + "' is not an ideal of " + c->name());
    s = std::make_shared<const NullStructure>(discrete_structure(c, it->second, ref));
  } else if (fn == "zero") {
    CategoryPtr c = category(arg);
    auto dist = find_distinguished(*c);
    if (!dist.zero) throw Error("category " + arg + " has no zero object");
    Subset z(c->arrow_count());
    for (std::size_t g = 0; g < c->arrow_count(); ++g) {
      ArrowId gi = static_cast<int>(g);
      const auto& in = c->hom(c->dom(gi), *dist.zero);
      const auto& out = c->hom(*dist.zero, c->cod(gi));
      if (c->compose_raw(out.front(), in.front()) == gi) z.insert(gi);
    }
    s = std::make_shared<const NullStructure>(discrete_structure(c, z, ref));
  } else {
    throw Error("unknown structure '" + ref + "'");
  }
  derived_cache_[ref] = s;
  return s;
}

std::shared_ptr<Workspace> parse_workspace(std::string_view text, const std::string& source) {
  auto ws = std::make_shared<Workspace>();
  ws->source = source;
  Parser p(*ws);
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) p.line(++number, line);
  if (!p.errors.empty()) throw ParseFailure(p.errors, source);
  Elaborator e(*ws);
  e.run();
  if (!e.errors.empty()) throw ParseFailure(e.errors, source);
  return ws;
}

std::shared_ptr<Workspace> parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_workspace(buf.str(), path);
}

}  // namespace fincat::dsl
