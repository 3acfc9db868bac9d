#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reflgrp/errors.hpp"
#include "reflgrp/serialize.hpp"
#include "reflgrp/toric.hpp"

using namespace reflgrp;

namespace {

struct Options {
  bool json = false;
  int max_order = FiniteMatrixGroup::kDefaultMaxOrder;
};

void emit(const Json& payload, const Options& opts, const std::string& text) {
  if (opts.json)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << text;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string render_report(const ReflectionReport& r) {
  std::ostringstream os;
  os << "order: " << r.group_order << "\n";
  int classes = 0;
  for (int c : r.fixed_dim_profile) classes += c;
  os << "classes: " << classes << "\n";
  os << "fixed_dim profile: " << join_ints(r.fixed_dim_profile) << "\n";
  os << "reflection group: " << (r.is_reflection_group ? "yes" : "no") << "\n";
  os << "reflections: " << r.reflection_count << " (" << r.reflection_class_count
     << " classes)\n";
  os << "discriminant: " << r.discriminant_component_count << " components, multiplicities "
     << join_ints(r.hyperplane_multiplicities) << "\n";
  if (!r.invariant_degrees.empty())
    os << "degrees: " << join_ints(r.invariant_degrees) << "\n";
  os << "family: " << (r.family ? spec_label(*r.family) : "(not in catalog)") << "\n";
  return os.str();
}

int run_group(const std::string& path, const Options& opts) {
  GroupFile gf = load_group_file(path);
  FiniteMatrixGroup G = gf.generators.empty() ? trivial_group(gf.rank)
                                              : close_group(gf.generators, opts.max_order);
  ReflectionReport r = analyze(G);
  Json j = report_to_json(r);
  j["source"] = path;
  emit(j, opts, render_report(r));
  return 0;
}

int run_family(const std::string& name, int n, const Options& opts) {
  if (name.empty()) {
    Json list = Json::array();
    std::ostringstream os;
    for (Family f : all_families()) {
      list.push_back(Json{{"family", family_name(f)},
                          {"rank", family_rank(f)},
                          {"takes_n", family_takes_n(f)}});
      os << family_name(f) << "  (rank " << family_rank(f)
         << (family_takes_n(f) ? ", needs -n >= 3" : "") << ")\n";
    }
    emit(Json{{"families", std::move(list)}}, opts, os.str());
    return 0;
  }
  FamilySpec spec{family_from_name(name), n};
  ReflectionReport r = analyze(build_family(spec, opts.max_order));
  Json j = report_to_json(r);
  j["requested"] = spec_label(spec);
  emit(j, opts, "requested: " + spec_label(spec) + "\n" + render_report(r));
  return 0;
}

struct ToricExpectation {
  ToricCase which;
  bool smooth;
  std::optional<bool> crepant;
};

const std::vector<ToricExpectation>& toric_expectations() {
  static const std::vector<ToricExpectation> table{
      {ToricCase::YK_tetra, true, true},
      {ToricCase::YH_z2cubed, true, true},
      {ToricCase::Y_z2cubed, true, std::nullopt},
      {ToricCase::HHilb_z2cubed, true, true},
      {ToricCase::HHilbQuot_z2cubed, false, std::nullopt},
  };
  return table;
}

Json toric_case_json(ToricCase c, const FanReport& report) {
  Json j{{"case", toric_case_name(c)},
         {"per_cone_indices", report.per_cone_indices},
         {"smooth", report.smooth},
         {"singular_cones", report.singular_cones}};
  if (report.crepant)
    j["crepant"] = *report.crepant;
  else
    j["crepant"] = nullptr;
  return j;
}

int run_toric(const std::string& name, const Options& opts) {
  if (name.empty()) {
    Json list = Json::array();
    std::ostringstream os;
    for (ToricCase c : all_toric_cases()) {
      list.push_back(toric_case_name(c));
      os << toric_case_name(c) << "\n";
    }
    emit(Json{{"cases", std::move(list)}}, opts, os.str());
    return 0;
  }
  ToricCase c = toric_case_from_name(name);
  auto [fan, lattice] = builtin_toric_case(c);
  FanReport report = check_fan(fan, lattice);
  Json j = toric_case_json(c, report);
  std::ostringstream vol;
  vol << normalized_support_volume(fan, lattice);
  j["support_volume"] = vol.str();

  std::ostringstream os;
  os << "case: " << toric_case_name(c) << "\n";
  os << "cone indices: " << join_ints(report.per_cone_indices) << "\n";
  os << "smooth: " << (report.smooth ? "yes" : "no");
  if (!report.singular_cones.empty())
    os << " (singular cones: " << join_ints(report.singular_cones) << ")";
  os << "\n";
  os << "crepant: " << (report.crepant ? (*report.crepant ? "yes" : "no") : "n/a") << "\n";
  os << "support volume: " << vol.str() << "\n";
  emit(j, opts, os.str());
  return 0;
}

std::string render_verdict(const FamilyVerdict& v) {
  std::ostringstream os;
  os << spec_label(v.spec) << ": ";
  if (v.match && v.total_equals_class_count) {
    os << "match (" << v.class_count << " classes)";
  } else {
    os << "MISMATCH constructed " << v.constructed.str() << " vs predicted "
       << v.predicted.str();
  }
  if (v.sl_junior_classes) {
    os << "  [junior classes " << *v.sl_junior_classes << " vs " << v.blowup_line_components
       << " line blowups" << (*v.junior_equals_blowups ? "" : " -- informational mismatch")
       << "]";
  }
  return os.str();
}

int run_verify(const std::string& name, bool all, int n, int nmax, const Options& opts) {
  if (all == !name.empty()) {
    std::cerr << "verify: give exactly one of a family name or --all\n";
    return 2;
  }
  if (nmax < 3) throw BadParameter("--nmax must be at least 3");

  std::vector<FamilySpec> jobs;
  auto add_jobs = [&](Family f) {
    if (family_takes_n(f)) {
      if (n > 0)
        jobs.push_back({f, n});
      else
        for (int k = 3; k <= nmax; ++k) jobs.push_back({f, k});
    } else {
      jobs.push_back({f, 0});
    }
  };
  if (all) {
    for (Family f : all_families()) {
      if (f == Family::Z2 || f == Family::Dihedral) continue;  // no pipeline
      add_jobs(f);
    }
  } else {
    add_jobs(family_from_name(name));
  }
  std::sort(jobs.begin(), jobs.end(), [](const FamilySpec& a, const FamilySpec& b) {
    return std::make_pair(family_name(a.family), a.n) <
           std::make_pair(family_name(b.family), b.n);
  });

  bool ok = true;
  Json verdicts = Json::array();
  std::ostringstream os;
  for (const FamilySpec& spec : jobs) {
    FamilyVerdict v = verify_family(spec);
    ok = ok && v.match && v.total_equals_class_count;
    verdicts.push_back(verdict_to_json(v));
    os << render_verdict(v) << "\n";
  }

  Json j{{"verdicts", std::move(verdicts)}};
  if (all) {
    Json toric = Json::array();
    for (const ToricExpectation& e : toric_expectations()) {
      auto [fan, lattice] = builtin_toric_case(e.which);
      FanReport report = check_fan(fan, lattice);
      bool case_ok = fan_is_valid(fan) && report.smooth == e.smooth &&
                     report.crepant == e.crepant;
      if (!e.smooth)
        case_ok = case_ok && report.singular_cones.size() == 1 &&
                  report.per_cone_indices[report.singular_cones[0]] == 2;
      ok = ok && case_ok;
      Json tj = toric_case_json(e.which, report);
      tj["ok"] = case_ok;
      toric.push_back(std::move(tj));
      os << "toric " << toric_case_name(e.which) << ": " << (case_ok ? "ok" : "UNEXPECTED")
         << " (" << (report.smooth ? "smooth" : "singular")
         << (report.crepant && *report.crepant ? ", crepant" : "") << ")\n";
    }
    j["toric"] = std::move(toric);
  }
  j["all_match"] = ok;
  os << (ok ? "all checks passed" : "verification FAILED") << "\n";
  emit(j, opts, os.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic analyzer for the finite real reflection groups of rank <= 3"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opts;
  app.add_flag("--json", opts.json, "emit machine-readable JSON");
  app.add_option("--max-order", opts.max_order, "abort group closure beyond this many elements")
      ->capture_default_str();

  auto* group = app.add_subcommand("group", "analyze a group read from a JSON generator file");
  std::string path;
  group->add_option("file", path, "path to the group file")->required();

  auto* family = app.add_subcommand("family", "analyze a catalog family (no name: list them)");
  std::string family_arg;
  int family_n = 0;
  family->add_option("name", family_arg, "family name, e.g. octahedral");
  family->add_option("-n", family_n, "rotation order for the dihedral families");

  auto* verify = app.add_subcommand(
      "verify", "check the resolution pipeline against group class counts");
  std::string verify_arg;
  bool verify_all = false;
  int verify_n = 0;
  int nmax = 30;
  verify->add_option("name", verify_arg, "family to verify");
  verify->add_flag("--all", verify_all, "verify every family with a pipeline");
  verify->add_option("-n", verify_n, "single parameter instead of a sweep");
  verify->add_option("--nmax", nmax, "sweep bound for parameterized families")
      ->capture_default_str();

  auto* toric = app.add_subcommand("toric", "report on a builtin toric chart (no name: list)");
  std::string toric_arg;
  toric->add_option("case", toric_arg, "case name, e.g. YK_tetra");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (group->parsed()) return run_group(path, opts);
    if (family->parsed()) return run_family(family_arg, family_n, opts);
    if (verify->parsed()) return run_verify(verify_arg, verify_all, verify_n, nmax, opts);
    return run_toric(toric_arg, opts);
  } catch (const OrderExceeded& e) {
    std::cerr << e.what() << "\n  hint: raise --max-order\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
