#include "arithcs/verify.hpp"

#include <functional>
#include <random>

#include "arithcs/document.hpp"
#include "arithcs/error.hpp"
#include "arithcs/fixtures.hpp"

namespace arithcs {

namespace {

std::optional<GroupHom> character_of_order(const GroupPtr& g, std::uint32_t m) {
  for (auto& chi : all_homs(g, cyclic_group(m))) {
    for (Element x : chi.map()) {
      if (x != 0) return chi;
    }
  }
  return std::nullopt;
}

class Runner {
 public:
  explicit Runner(std::vector<PropertyResult>& out) : out_(out) {}

  // `body` returns an empty string on success, else a description.
  void property(const std::string& name, const std::function<void(const std::function<void(std::string)>&)>& body) {
    PropertyResult r;
    r.name = name;
    auto record = [&r](std::string failure) {
      ++r.cases;
      if (!failure.empty()) {
        if (r.failures++ == 0) r.detail = std::move(failure);
      }
    };
    try {
      body(record);
    } catch (const Error& e) {
      ++r.failures;
      if (r.detail.empty()) r.detail = e.kind() + ": " + e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::vector<PropertyResult>& out_;
};

std::string where(const std::string& group, const ModulePtr& m, std::size_t degree) {
  return group + " (modulus " + std::to_string(m->modulus()) + ", rank " + std::to_string(m->rank()) +
         (m->is_trivial() ? ", trivial" : ", twisted") + ") degree " + std::to_string(degree);
}

}  // namespace

std::vector<CorpusGroup> corpus_groups() {
  return {{"Z/2", cyclic_group(2)},
          {"Z/3", cyclic_group(3)},
          {"Z/4", cyclic_group(4)},
          {"Z/2xZ/2", direct_product(cyclic_group(2), cyclic_group(2))},
          {"Z/6", cyclic_group(6)},
          {"S3", symmetric_group(3)},
          {"D4", dihedral_group(4)},
          {"Q8", quaternion_group()}};
}

ModulePtr scalar_module(const GroupPtr& g) {
  if (auto chi = character_of_order(g, 2)) {
    std::vector<Residue> s(g->order());
    for (Element x = 0; x < g->order(); ++x) s[x] = (*chi)(x) ? 2 : 1;
    return GModule::scalar(g, 3, std::move(s));
  }
  if (auto chi = character_of_order(g, 3)) {
    const Residue powers[3] = {1, 2, 4};
    std::vector<Residue> s(g->order());
    for (Element x = 0; x < g->order(); ++x) s[x] = powers[(*chi)(x)];
    return GModule::scalar(g, 7, std::move(s));
  }
  return nullptr;
}

ModulePtr swap_module(const GroupPtr& g) {
  auto chi = character_of_order(g, 2);
  if (!chi) return nullptr;
  std::vector<std::vector<Residue>> action(g->order());
  for (Element x = 0; x < g->order(); ++x) {
    action[x] = (*chi)(x) ? std::vector<Residue>{0, 1, 1, 0} : std::vector<Residue>{1, 0, 0, 1};
  }
  return std::make_shared<const GModule>(g, ModuleOverZn(4, {4, 4}), std::move(action));
}

std::vector<ModulePtr> corpus_modules(const GroupPtr& g) {
  std::vector<ModulePtr> out = {GModule::trivial(g, 2), GModule::trivial(g, 3)};
  if (auto m = scalar_module(g)) out.push_back(m);
  if (auto m = swap_module(g)) out.push_back(m);
  return out;
}

std::vector<PropertyResult> run_property_suite(const SuiteOptions& options) {
  std::vector<PropertyResult> results;
  Runner run(results);
  std::mt19937_64 rng(options.seed);
  const auto corpus = corpus_groups();
  auto pick = [&rng](const FiniteGroup& g) { return static_cast<Element>(rng() % g.order()); };

  run.property("d_squared_zero", [&](auto record) {
    for (const auto& [name, g] : corpus) {
      for (const auto& m : corpus_modules(g)) {
        for (std::size_t deg = 0; deg <= 2; ++deg) {
          for (std::size_t s = 0; s < options.samples; ++s) {
            const Cochain f = random_cochain(m, deg, rng);
            record(differential(differential(f)).is_zero() ? "" : where(name, m, deg));
          }
        }
      }
    }
  });

  run.property("pullback_commutes_with_d", [&](auto record) {
    for (const auto& [name, g] : corpus) {
      const auto homs = all_homs(g, g);
      for (const auto& m : corpus_modules(g)) {
        for (std::size_t deg = 0; deg <= 2; ++deg) {
          for (std::size_t s = 0; s < options.samples; ++s) {
            const GroupHom& rho = homs[rng() % homs.size()];
            const Cochain f = random_cochain(m, deg, rng);
            record(pullback(rho, differential(f)) == differential(pullback(rho, f)) ? "" : where(name, m, deg));
          }
        }
      }
    }
  });

  run.property("conjugation_commutes_with_d", [&](auto record) {
    for (const auto& [name, g] : corpus) {
      for (const auto& m : corpus_modules(g)) {
        for (std::size_t deg = 0; deg <= 2; ++deg) {
          for (std::size_t s = 0; s < options.samples; ++s) {
            const Cochain f = random_cochain(m, deg, rng);
            const Element a = pick(*g);
            record(conjugate(differential(f), a) == differential(conjugate(f, a)) ? "" : where(name, m, deg));
          }
        }
      }
    }
  });

  run.property("conjugation_homotopy", [&](auto record) {
    for (const auto& [name, g] : corpus) {
      for (const auto& m : corpus_modules(g)) {
        for (std::size_t deg = 1; deg <= 3; ++deg) {
          for (std::size_t s = 0; s < options.samples; ++s) {
            const Cochain f = random_cochain(m, deg, rng);
            const Element a[1] = {pick(*g)};
            const Cochain lhs = homotopy(a, differential(f)) + differential(homotopy(a, f));
            record(lhs == conjugate(f, a[0]) - f ? "" : where(name, m, deg));
          }
        }
      }
    }
  });

  run.property("second_homotopy_on_cocycles", [&](auto record) {
    // h_b - h_ab + (h_a)^b = d(-h_{a,b}) on 3-cocycles.
    for (const auto& [name, g] : corpus) {
      if (g->order() > 6) continue;
      for (const auto& m : corpus_modules(g)) {
        const Cochain f = differential(random_cochain(m, 2, rng));
        for (Element a = 0; a < g->order(); ++a) {
          for (Element b = 0; b < g->order(); ++b) {
            const Element ea[1] = {a}, eb[1] = {b}, eab[1] = {g->mul(a, b)}, pair[2] = {a, b};
            const Cochain lhs = homotopy(eb, f) - homotopy(eab, f) + conjugate(homotopy(ea, f), b);
            record(lhs == -differential(homotopy(pair, f)) ? "" : where(name, m, 3));
          }
        }
      }
    }
  });

  run.property("cup_leibniz", [&](auto record) {
    for (const auto& [name, g] : corpus) {
      for (const auto& m : {GModule::trivial(g, 3), scalar_module(g)}) {
        for (std::size_t p = 0; p <= 2; ++p) {
          for (std::size_t s = 0; s < options.samples; ++s) {
            const Cochain x = random_cochain(m, p, rng), y = random_cochain(GModule::trivial(g, m->modulus()), 1, rng);
            const Cochain rhs = cup(differential(x), y) + cup(x, differential(y)).scaled(p % 2 ? -1 : 1);
            record(differential(cup(x, y)) == rhs ? "" : where(name, m, p));
          }
        }
      }
    }
  });

  run.property("bockstein_is_connecting_map", [&](auto record) {
    for (const auto& [name, g] : corpus) {
      for (std::uint32_t n : {2u, 3u}) {
        const ModulePtr m = GModule::trivial(g, n);
        for (std::size_t s = 0; s < options.samples; ++s) {
          const Cochain f = differential(random_cochain(m, 1, rng));
          const Cochain b = bockstein(f);
          record(differential(b).is_zero() ? "" : where(name, m, 2));
        }
      }
    }
  });

  run.property("classify_consistency", [&](auto record) {
    for (const auto& [name, g] : corpus) {
      for (const auto& m : corpus_modules(g)) {
        for (std::size_t deg = 1; deg <= 2; ++deg) {
          const Classifier cl(m, deg);
          for (std::size_t s = 0; s < options.samples; ++s) {
            const Cochain f = differential(random_cochain(m, deg - 1, rng));
            const auto c = cl.classify(f);
            const auto* cob = std::get_if<Coboundary>(&c);
            record(cob && cob->preimage && differential(*cob->preimage) == f ? "" : where(name, m, deg));
            const Cochain r = random_cochain(m, deg, rng);
            const auto cr = cl.classify(r);
            const bool cocycle = differential(r).is_zero();
            record(std::holds_alternative<NonCocycle>(cr) != cocycle ? "" : where(name, m, deg));
          }
        }
      }
    }
  });

  run.property("h3_of_cyclic_generated_by_alpha_cup_bockstein", [&](auto record) {
    for (std::uint32_t n : {2u, 3u, 4u}) {
      const CohomologyGroup h3 = cohomology(GModule::trivial(cyclic_group(n), n), 3);
      const bool shape = h3.invariant_factors() == std::vector<std::uint32_t>{n};
      const bool generates = shape && ModRing(n).is_unit(h3.coordinates(alpha_cup_bockstein(n))[0]);
      record(generates ? "" : "Z/" + std::to_string(n));
    }
  });

  run.property("kummer_sign_coherence", [&](auto record) {
    const auto k = kummer_trivialization(fixtures::kummer_reduction(), fixtures::kummer_identity_lift());
    record(differential(k.t) == pullback(fixtures::kummer_reduction(), alpha_cup_bockstein(2)) ? "" : "Z/4 -> Z/2");
  });

  run.property("toy_invariant_well_defined", [&](auto record) {
    const std::vector<std::pair<GlobalDatum, GroupHom>> cases = {
        {fixtures::quaternion_toy(), fixtures::quaternion_toy_rho()},
        {fixtures::dicyclic_toy(), fixtures::dicyclic_toy_rho()}};
    for (const auto& [datum, rho] : cases) {
      const CsContext ctx(datum);
      const InvariantValue base = cs_invariant(ctx, rho);
      for (Element a = 0; a < datum.gauge_group->order(); ++a) {
        record(cs_invariant(ctx, conjugation_hom(datum.gauge_group, a).after(rho)) == base ? "" : "conjugation");
      }
      for (std::size_t s = 0; s < 3; ++s) {
        record(cs_invariant(ctx, rho, {rng()}) == base ? "" : "re-solve");
      }
      record(section_l_value(ctx, rho, {rng()}) == base ? "" : "gluing vs torsor");
    }
  });

  run.property("reciprocity_gate", [&](auto record) {
    record(validate_global_datum(fixtures::reciprocity_datum(true)).passed() ? "" : "balanced rejected");
    const auto broken = validate_global_datum(fixtures::reciprocity_datum(false));
    const auto* f = broken.first_failure();
    record(f && f->witness_cocycle ? "" : "broken accepted");
  });

  run.property("document_round_trip", [&](auto record) {
    Document doc;
    doc.add_datum("toy", fixtures::quaternion_toy());
    doc.add_hom("rho", fixtures::quaternion_toy_rho());
    doc.add_module("twisted", swap_module(dihedral_group(4)));
    doc.add_cochain("c", random_cochain(scalar_module(cyclic_group(3)), 2, rng));
    const std::string text = doc.serialize();
    record(Document::parse(text).serialize() == text ? "" : "serialize o parse");
  });

  return results;
}

}  // namespace arithcs
