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

#include "fincat/dsl/printer.hpp"

#include <sstream>

namespace fincat::dsl {

namespace {

std::string set_text(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? " " : "") + names[i];
  return out + "}";
}

std::vector<std::string> object_names(const Category& c, const Subset& s) {
  std::vector<std::string> out;
  for (int x : s.members()) out.push_back(c.object_name(x));
  return out;
}

std::vector<std::string> arrow_names(const Category& c, const Subset& s) {
  std::vector<std::string> out;
  for (int g : s.members()) out.push_back(c.arrow_name(g));
  return out;
}

const char* mode_text(InducedMode m) {
  switch (m) {
    case InducedMode::preradical:
      return "preradical";
    case InducedMode::precoradical:
      return "precoradical";
    case InducedMode::pair:
      return "pair";
    case InducedMode::subcategory:
      return "subcategory";
  }
  return "?";
}

}  // namespace

std::string print_workspace(const Workspace& ws) {
  std::ostringstream out;
  bool first = true;
  for (auto [kind, index] : ws.order) {
    if (!first) out << "\n";
    first = false;
    switch (kind) {
      case DeclKind::category: {
        const auto& d = ws.category_decls[index];
        out << "category " << d.name << "\n";
        if (!d.objects.empty()) {
          out << "objects";
          for (const auto& o : d.objects) out << " " << o;
          out << "\n";
        }
        for (const auto& a : d.arrows) out << "arrow " << a.name << " : " << a.dom << " -> " << a.cod << "\n";
        for (const auto& c : d.composites) out << "compose " << c.g << " " << c.f << " = " << c.h << "\n";
        break;
      }
      case DeclKind::structure: {
        const auto& d = ws.structure_decls[index];
        out << "nullhomotopy " << d.name << " on " << d.category << "\n";
        for (const auto& h : d.homotopies) {
          out << "homotopies " << h.arrow << " :";
          for (const auto& l : h.labels) out << " " << l;
          out << "\n";
        }
        for (const auto& w : d.whiskers) {
          if (w.left)
            out << "wl " << w.arrow << " " << w.homotopy << " = " << w.result << "\n";
          else
            out << "wr " << w.homotopy << " " << w.arrow << " = " << w.result << "\n";
        }
        break;
      }
      case DeclKind::ideal: {
        const auto& d = ws.ideal_decls[index];
        out << "ideal " << d.name << " on " << d.category << " = " << set_text(d.arrows.names) << "\n";
        break;
      }
      case DeclKind::pair: {
        const auto& d = ws.pair_decls[index];
        const Category& c = ws.structure(d.structure)->base();
        out << "pair " << d.name << " on " << d.structure << " torsion "
            << set_text(object_names(c, ws.pair_torsion.at(d.name))) << " free "
            << set_text(object_names(c, ws.pair_free.at(d.name))) << "\n";
        break;
      }
      case DeclKind::system: {
        const auto& d = ws.system_decls[index];
        const Category& c = *ws.category(d.category);
        out << "system " << d.name << " on " << d.category << " e " << set_text(arrow_names(c, ws.system_e.at(d.name)))
            << " m " << set_text(arrow_names(c, ws.system_m.at(d.name))) << "\n";
        break;
      }
      case DeclKind::functor: {
        const auto& d = ws.functor_decls[index];
        out << "functor " << d.name << " : " << d.src << " -> " << d.dst << "\n";
        for (const auto& [x, y] : d.map) out << "map " << x << " = " << y << "\n";
        break;
      }
      case DeclKind::transformation: {
        const auto& d = ws.transformation_decls[index];
        out << "transformation " << d.name << " : " << d.source << " => " << d.target << "\n";
        for (const auto& [x, f] : d.components) out << "component " << x << " = " << f << "\n";
        break;
      }
      case DeclKind::adjunction: {
        const auto& d = ws.adjunction_decls[index];
        out << "adjunction " << d.name << " : " << d.left << " -| " << d.right << " unit " << d.unit << " counit "
            << d.counit << "\n";
        break;
      }
      case DeclKind::induced: {
        const auto& d = ws.induced_decls[index];
        out << "induced " << d.name << " from " << mode_text(d.mode) << " " << d.first;
        if (d.mode == InducedMode::pair) out << " " << d.second;
        if (d.mode == InducedMode::subcategory) {
          const Category& c = *ws.category(d.first);
          Subset s(c.object_count());
          for (const auto& n : d.objects.names) s.insert(*c.find_object(n));
          out << " " << set_text(object_names(c, c.iso_closure_objects(s)));
        }
        out << "\n";
        break;
      }
    }
  }
  return out.str();
}

}  // namespace fincat::dsl
