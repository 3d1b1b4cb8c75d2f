#include "arithcs/fixtures.hpp"

#include <random>

namespace arithcs::fixtures {

namespace {

Cochain h2_generator(const GroupPtr& g, std::uint32_t n) {
  const CohomologyGroup h2(GModule::trivial(g, n), 2);
  return h2.generators().front();
}

PlaceDatum place(std::string name, GroupHom embedding, std::vector<Element> inertia, std::uint32_t n,
                 Residue normalization = 1) {
  Cochain gen = h2_generator(embedding.dom(), n);
  return {std::move(name), std::move(embedding), std::move(inertia), std::move(gen), normalization};
}

}  // namespace

GlobalDatum quaternion_toy() {
  const std::uint32_t n = 2;
  const GroupPtr g = quaternion_group(), a = dihedral_group(3), z2 = cyclic_group(2);
  const ModulePtr coeffs = GModule::trivial(a, n);
  std::mt19937_64 rng(11);
  const Cochain c = cohomology(coeffs, 3).generators().front() + differential(random_cochain(coeffs, 2, rng));
  GlobalDatum d{n, g, {}, a, c};
  d.places.push_back(place("centre", GroupHom(z2, g, {0, 1}), {0, 1}, n));
  return d;
}

GroupHom quaternion_toy_rho() {
  return GroupHom(quaternion_group(), dihedral_group(3), {0, 0, 0, 0, 3, 3, 3, 3});
}

GlobalDatum dihedral_toy() {
  const std::uint32_t n = 3;
  const GroupPtr g = dihedral_group(9), a = dihedral_group(3), z3 = cyclic_group(3);
  GlobalDatum d{n, g, {}, a, cohomology(GModule::trivial(a, n), 3).generators().front()};
  d.places.push_back(place("v1", GroupHom(z3, g, {0, 3, 6}), {0, 1, 2}, n));
  d.places.push_back(place("v2", GroupHom(z3, g, {0, 6, 3}), {0, 1, 2}, n));
  return d;
}

GroupHom dihedral_toy_rho() {
  std::vector<Element> map(18);
  for (Element x = 0; x < 18; ++x) map[x] = (x % 9) % 3 + 3 * (x / 9);
  return GroupHom(dihedral_group(9), dihedral_group(3), std::move(map));
}

GlobalDatum dicyclic_toy() {
  const std::uint32_t n = 2;
  const GroupPtr g = inversion_semidirect_z4(3), a = dihedral_group(3), z6 = cyclic_group(6);
  const GroupHom sgn(a, cyclic_group(2), {0, 0, 0, 1, 1, 1});
  std::mt19937_64 rng(7);
  const ModulePtr coeffs = GModule::trivial(a, n);
  const Cochain c = pullback(sgn, alpha_cup_bockstein(2)) + differential(random_cochain(coeffs, 2, rng));
  GlobalDatum d{n, g, {}, a, c};
  std::vector<Element> e1(6), e2(6);
  for (Element k = 0; k < 6; ++k) {
    e1[k] = k % 3 + 3 * ((2 * k) % 4);
    e2[k] = (3 - k % 3) % 3 + 3 * ((2 * k) % 4);
  }
  d.places.push_back(place("v1", GroupHom(z6, g, e1), {0, 3}, n));
  d.places.push_back(place("v2", GroupHom(z6, g, e2), {0, 3}, n));
  return d;
}

GroupHom dicyclic_toy_rho() {
  std::vector<Element> map(12);
  for (Element x = 0; x < 12; ++x) map[x] = x % 3 + 3 * ((x / 3) % 2);
  return GroupHom(inversion_semidirect_z4(3), dihedral_group(3), std::move(map));
}

GlobalDatum reciprocity_datum(bool balanced) {
  const std::uint32_t n = 3;
  const GroupPtr z3 = cyclic_group(3);
  GlobalDatum d{n, z3, {}, z3, alpha_cup_bockstein(3)};
  d.places.push_back(place("p", identity_hom(z3), {0, 1, 2}, n, 1));
  d.places.push_back(place("q", identity_hom(z3), {0, 1, 2}, n, balanced ? 2 : 1));
  return d;
}

GroupHom kummer_reduction() { return GroupHom(cyclic_group(4), cyclic_group(2), {0, 1, 0, 1}); }

GroupHom kummer_identity_lift() { return identity_hom(cyclic_group(4)); }

std::vector<std::pair<std::string, Document>> documents() {
  std::vector<std::pair<std::string, Document>> out;
  auto add = [&out](std::string file) -> Document& { return out.emplace_back(std::move(file), Document{}).second; };

  add("z2.json").add_group("z2", cyclic_group(2));
  Document& cochains = add("z2_cochains.json");
  cochains.add_cochain("alpha", identity_character(2), true);
  cochains.add_cochain("alpha_cup_bockstein", alpha_cup_bockstein(2), true);
  add("z2_identity.json").add_hom("identity", identity_hom(cyclic_group(2)));
  add("toy_datum.json").add_datum("toy", quaternion_toy());
  add("toy_rho.json").add_hom("rho", quaternion_toy_rho());
  add("dicyclic_datum.json").add_datum("dicyclic", dicyclic_toy());
  add("dicyclic_rho.json").add_hom("rho", dicyclic_toy_rho());
  add("reciprocity_balanced.json").add_datum("balanced", reciprocity_datum(true));
  add("reciprocity_broken.json").add_datum("broken", reciprocity_datum(false));
  Document& kummer = add("kummer.json");
  kummer.add_hom("f", kummer_reduction());
  kummer.add_hom("lift", kummer_identity_lift());
  return out;
}

}  // namespace arithcs::fixtures
