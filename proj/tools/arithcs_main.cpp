// Command-line front end. Every command prints one JSON document: the object
// sections of the data format (so outputs can be fed back in) plus "result".
#include <CLI11.hpp>

#include <iostream>

#include "arithcs/document.hpp"
#include "arithcs/error.hpp"
#include "arithcs/verify.hpp"

using namespace arithcs;
using nlohmann::json;

namespace {

constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 64;

int exit_code(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::kValidation:
      return 2;
    case ErrorCategory::kComputation:
      return 3;
    case ErrorCategory::kParse:
      return 4;
  }
  return 1;
}

struct Loaded {
  Document doc;
  std::string name;
};

Loaded load(const std::string& ref) {
  auto [path, name] = split_reference(ref);
  return {Document::load(path), name};
}

GroupPtr load_group(const std::string& ref) {
  auto l = load(ref);
  return l.doc.group(l.name);
}
Cochain load_cochain(const std::string& ref) {
  auto l = load(ref);
  return l.doc.cochain(l.name);
}
GroupHom load_hom(const std::string& ref) {
  auto l = load(ref);
  return l.doc.hom(l.name);
}
GlobalDatum load_datum(const std::string& ref) {
  auto l = load(ref);
  return l.doc.datum(l.name);
}

std::string fraction(const InvariantValue& v) {
  return std::to_string(v.numerator) + "/" + std::to_string(v.modulus);
}

void emit(const Document& doc, json result) {
  json out = doc.to_json();
  out["result"] = std::move(result);
  std::cout << out.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite group cohomology and arithmetic Chern-Simons invariants"};
  app.require_subcommand(1);
  int status = 0;

  std::string group_ref, module_ref, cochain_ref, left_ref, right_ref, datum_ref, rho_ref, hom_ref, lift_ref;
  std::uint32_t modulus = 0;
  std::size_t degree = 0, max_degree = kDefaultCohomologyDegree, samples = 10;
  Element element = 0;
  std::vector<Element> elements;
  std::optional<std::uint64_t> seed;
  std::uint64_t verify_seed = 42;

  auto* coh = app.add_subcommand("cohomology", "invariant factors and generating cocycles of H^i(G, M)");
  coh->add_option("--group", group_ref, "FILE[#NAME] of the group (trivial coefficients)");
  coh->add_option("--modulus", modulus, "n for trivial Z/n coefficients");
  coh->add_option("--module", module_ref, "FILE[#NAME] of a G-module");
  coh->add_option("--degree", degree, "cohomological degree")->required();
  coh->add_option("--max-degree", max_degree, "cap on the degree")->capture_default_str();
  coh->callback([&] {
    ModulePtr m;
    if (!module_ref.empty()) {
      auto l = load(module_ref);
      m = l.doc.module(l.name);
    } else {
      if (group_ref.empty() || modulus == 0) throw CLI::ValidationError("give --module, or --group with --modulus");
      m = GModule::trivial(load_group(group_ref), modulus);
    }
    const CohomologyGroup h = cohomology(m, degree, max_degree);
    Document doc;
    json gens = json::array();
    for (std::size_t j = 0; j < h.generators().size(); ++j) {
      gens.push_back(doc.add_cochain("generator_" + std::to_string(j), h.generators()[j], true));
    }
    emit(doc, {{"degree", degree}, {"invariant_factors", h.invariant_factors()}, {"order", h.order()},
               {"generators", gens}});
  });

  auto* cls = app.add_subcommand("classify", "cocycle / coboundary / nontrivial class");
  cls->add_option("--cochain", cochain_ref, "FILE[#NAME]")->required();
  cls->callback([&] {
    const Cochain f = load_cochain(cochain_ref);
    Document doc;
    json result;
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, NonCocycle>) {
            result = {{"classification", "NonCocycle"}, {"witness", c.witness}};
          } else if constexpr (std::is_same_v<T, Coboundary>) {
            result = {{"classification", "Coboundary"}};
            if (c.preimage) result["preimage"] = doc.add_cochain("preimage", *c.preimage);
          } else {
            result = {{"classification", "NontrivialClass"}, {"coords", c.coords}};
          }
        },
        classify(f));
    emit(doc, result);
  });

  auto* cupc = app.add_subcommand("cup", "cup product of two cochains");
  cupc->add_option("--left", left_ref, "FILE[#NAME]")->required();
  cupc->add_option("--right", right_ref, "FILE[#NAME]")->required();
  cupc->callback([&] {
    Document doc;
    emit(doc, {{"cochain", doc.add_cochain("cup", cup(load_cochain(left_ref), load_cochain(right_ref)))}});
  });

  auto* bock = app.add_subcommand("bockstein", "connecting map of 0 -> Z/n -> Z/n^2 -> Z/n -> 0");
  bock->add_option("--cochain", cochain_ref, "FILE[#NAME]")->required();
  bock->callback([&] {
    Document doc;
    emit(doc, {{"cochain", doc.add_cochain("bockstein", bockstein(load_cochain(cochain_ref)))}});
  });

  auto* conj = app.add_subcommand("conjugate", "f^a(g..) = a^-1 . f(a g a^-1, ..)");
  conj->add_option("--cochain", cochain_ref, "FILE[#NAME]")->required();
  conj->add_option("--element", element, "a")->required();
  conj->callback([&] {
    Document doc;
    emit(doc, {{"cochain", doc.add_cochain("conjugate", conjugate(load_cochain(cochain_ref), element))}});
  });

  auto* hom = app.add_subcommand("homotopy", "shuffle homotopy h_{a1..ak, f}");
  hom->add_option("--cochain", cochain_ref, "FILE[#NAME]")->required();
  hom->add_option("--elements", elements, "a1,a2,...")->delimiter(',')->required();
  hom->callback([&] {
    Document doc;
    emit(doc, {{"cochain", doc.add_cochain("homotopy", homotopy(elements, load_cochain(cochain_ref)))}});
  });

  auto add_datum_options = [&](CLI::App* sub) {
    sub->add_option("--datum", datum_ref, "FILE[#NAME] of a global datum")->required();
    sub->add_option("--rho", rho_ref, "FILE[#NAME] of a hom from the global group to the gauge group")->required();
    sub->add_option("--seed", seed, "permute the global solve with this seed");
  };

  auto* inv = app.add_subcommand("invariant", "Chern-Simons invariant by gluing");
  add_datum_options(inv);
  inv->callback([&] {
    const CsContext ctx(load_datum(datum_ref));
    const InvariantValue v = cs_invariant(ctx, load_hom(rho_ref), {seed});
    emit(Document{}, {{"invariant", fraction(v)}, {"numerator", v.numerator}, {"modulus", v.modulus}});
  });

  auto* sec = app.add_subcommand("section", "torsor section from a global trivialization, with its L-class");
  add_datum_options(sec);
  sec->callback([&] {
    const CsContext ctx(load_datum(datum_ref));
    const GroupHom rho = load_hom(rho_ref);
    const TorsorElement x = cs_section(ctx, rho, {seed});
    Document doc;
    json components = json::object();
    for (std::size_t v = 0; v < x.components.size(); ++v) {
      const std::string& place = ctx.place(v).name;
      components[place] = doc.add_cochain("section_" + place, x.components[v]);
    }
    const InvariantValue l = section_l_value(ctx, rho, {seed});
    emit(doc, {{"components", components}, {"l_class", fraction(l)}});
  });

  auto* kum = app.add_subcommand("kummer", "trivialize f^*(alpha u delta alpha) through a lift to Z/p^2");
  kum->add_option("--hom", hom_ref, "FILE[#NAME] of f: N -> Z/p")->required();
  kum->add_option("--lift", lift_ref, "FILE[#NAME] of a lift N -> Z/p^2 (searched for when absent)");
  kum->callback([&] {
    std::optional<GroupHom> lift;
    if (!lift_ref.empty()) lift = load_hom(lift_ref);
    const KummerTrivialization k = kummer_trivialization(load_hom(hom_ref), lift);
    Document doc;
    emit(doc, {{"lift", doc.add_hom("lift", k.lift)}, {"b", doc.add_cochain("b", k.b)}, {"t", doc.add_cochain("t", k.t)}});
  });

  auto* val = app.add_subcommand("validate", "check a global datum, including reciprocity");
  val->add_option("--datum", datum_ref, "FILE[#NAME]")->required();
  val->callback([&] {
    const ValidationReport report = validate_global_datum(load_datum(datum_ref));
    Document doc;
    json checks = json::array();
    for (const auto& c : report.checks) {
      json j = {{"name", c.name}, {"passed", c.passed}};
      if (!c.detail.empty()) j["detail"] = c.detail;
      if (!c.witness.empty()) j["witness"] = c.witness;
      if (c.witness_cocycle) j["witness_cocycle"] = doc.add_cochain("witness", *c.witness_cocycle, true);
      checks.push_back(std::move(j));
    }
    emit(doc, {{"passed", report.passed()}, {"checks", checks}});
    if (!report.passed()) status = exit_code(ErrorCategory::kValidation);
  });

  auto* ver = app.add_subcommand("verify", "run the exact property suite");
  ver->add_option("--seed", verify_seed, "random seed")->capture_default_str();
  ver->add_option("--samples", samples, "random draws per module and degree")->capture_default_str();
  ver->callback([&] {
    json props = json::array();
    bool ok = true;
    for (const auto& r : run_property_suite({verify_seed, samples})) {
      json j = {{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}};
      if (!r.detail.empty()) j["detail"] = r.detail;
      props.push_back(std::move(j));
      ok &= r.passed();
    }
    emit(Document{}, {{"passed", ok}, {"seed", verify_seed}, {"properties", props}});
    if (!ok) status = kExitPropertyFailure;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const Error& e) {
    json err = {{"category", to_string(e.category())}, {"kind", e.kind()}, {"message", e.what()}};
    if (!e.witness().empty()) err["witness"] = e.witness();
    std::cerr << json{{"error", err}}.dump() << "\n";
    return exit_code(e.category());
  } catch (const std::exception& e) {
    std::cerr << json{{"error", {{"category", "internal"}, {"message", e.what()}}}}.dump() << "\n";
    return 70;
  }
  return status;
}
