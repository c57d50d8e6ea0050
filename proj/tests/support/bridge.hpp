// Conversion from the naive test models to the library's ModalModel.

#pragma once

#include "pqa/oracle.hpp"
#include "support/naive.hpp"

namespace naive {

inline pqa::ModalModel to_modal(const Model& m, const Symbols& s) {
  auto vocab = std::make_shared<pqa::Vocabulary>();
  for (const auto& [p, ar] : s.predicates) vocab->add_predicate(p, ar);
  for (const auto& [f, ar] : s.functions) vocab->add_function(f, ar, s.rigid.count(f) > 0);
  pqa::ModalModel out;
  out.vocab = vocab;
  out.domain_size = m.domain;
  out.rigid.resize(vocab->functions.size());
  for (std::size_t f = 0; f < vocab->functions.size(); ++f) {
    const auto& info = vocab->functions[f];
    if (!info.rigid) continue;
    for (const Tuple& c : tuples(info.arity, m.domain)) out.rigid[f].push_back(m.worlds[0].functions.at(info.name).at(c));
  }
  for (const World& w : m.worlds) {
    pqa::WorldInterp wi;
    for (const auto& p : vocab->predicates) {
      std::vector<std::uint8_t> rel;
      auto it = w.relations.find(p.name);
      for (const Tuple& c : tuples(p.arity, m.domain)) rel.push_back(it != w.relations.end() && it->second.count(c));
      wi.relations.push_back(rel);
    }
    for (const auto& f : vocab->functions) {
      std::vector<int> table;
      if (!f.rigid)
        for (const Tuple& c : tuples(f.arity, m.domain)) table.push_back(w.functions.at(f.name).at(c));
      wi.functions.push_back(table);
    }
    out.worlds.push_back(wi);
  }
  return out;
}

inline pqa::Signature signature_of(const Symbols& s) {
  pqa::Signature sig;
  for (const auto& [p, ar] : s.predicates) sig.declare_predicate(p, ar);
  for (const auto& [f, ar] : s.functions) sig.declare_function(f, ar, s.rigid.count(f) > 0);
  return sig;
}

}  // namespace naive
