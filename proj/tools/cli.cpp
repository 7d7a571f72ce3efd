#include "cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "group_spec.hpp"
#include "permpoly/errors.hpp"
#include "permpoly/face.hpp"
#include "permpoly/perm_group.hpp"
#include "permpoly/polytope.hpp"
#include "permpoly/theorem_report.hpp"

namespace permpoly::cli {

namespace {

void print_matrix(std::ostream& out, const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) out << ' ';
      out << to_string(m(i, j));
    }
    out << '\n';
  }
}

void print_generators(std::ostream& out, const PermGroup& group) {
  if (group.generators().empty()) {
    out << "()";
    return;
  }
  for (std::size_t k = 0; k < group.generators().size(); ++k) {
    if (k) out << ';';
    out << to_string(group.generators()[k]);
  }
}

void print_certificate(std::ostream& out, const FaceCertificate& cert) {
  out << "certificate b = " << to_string(cert.level) << "\n";
  print_matrix(out, cert.functional);
}

void print_report(std::ostream& out, const TheoremReport& report) {
  out << "group " << report.group << " degree " << report.degree << " order " << report.order
      << "\n";
  for (const auto& r : report.records) {
    out << "order " << r.order << "\torbits " << to_string(r.orbit_partition)
        << "\tcombinatorial " << (r.combinatorial ? "face" : "not-face") << "\tgeometric "
        << (r.geometric ? "face" : "not-face") << "\n";
  }
  out << "subgroups " << report.subgroup_count << "\n"
      << "face-subgroups " << report.face_subgroup_count << "\n"
      << "agreement " << (report.agreement ? "true" : "false") << "\n";
}

struct Options {
  std::string group;
  std::size_t closure_cap = kDefaultClosureCap;
  std::size_t subgroup_cap = kDefaultSubgroupCap;
  std::size_t threads = 0;
  std::string partition;
  std::string subgroup;
  std::string method = "both";
  std::string json_path;
  bool oracle = false;
  bool json = false;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact permutation-polytope toolkit: orbits, stabilizers, barycenters, faces",
               "permpoly"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--closure-cap", opt.closure_cap, "Maximum group order accepted by closure");

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("group", opt.group, "S<n>, A<n>, C<n>, D<n> or <n>:<gen>;<gen>;...")
        ->required();
  };

  auto* orbits = app.add_subcommand("orbits", "Print the orbit partition");
  add_group(orbits);

  auto* stab = app.add_subcommand("stab", "Print the elements of a partition stabilizer");
  add_group(stab);
  stab->add_option("--partition", opt.partition, "Blocks like \"1,2|3,4\"")->required();

  auto* bary = app.add_subcommand("barycenter", "Print the vertex barycenter");
  add_group(bary);
  bary->add_flag("--oracle", opt.oracle, "Average all permutation matrices instead of using orbits");
  bary->add_flag("--json", opt.json, "Emit the matrix as JSON");

  auto* dim = app.add_subcommand("dim", "Print the dimension of the permutation polytope");
  add_group(dim);

  auto* face_test = app.add_subcommand("face-test", "Decide whether P(H) is a face of P(G)");
  add_group(face_test);
  face_test->add_option("--subgroup", opt.subgroup, "Generators of H, ';'-separated")
      ->required();
  face_test->add_option("--method", opt.method, "comb, lp or both")
      ->check(CLI::IsMember({"comb", "lp", "both"}));

  auto* faces = app.add_subcommand("face-subgroups", "List the face-subgroups");
  add_group(faces);
  faces->add_option("--subgroup-cap", opt.subgroup_cap, "Maximum group order to enumerate");

  auto* verify = app.add_subcommand("verify-theorem", "Run both face tests on every subgroup");
  add_group(verify);
  verify->add_option("--json", opt.json_path, "Write the report as JSON to this path");
  verify->add_option("--subgroup-cap", opt.subgroup_cap, "Maximum group order to enumerate");
  verify->add_option("--threads", opt.threads, "Worker threads (0: all cores)");

  auto* subgroups = app.add_subcommand("subgroups", "List all subgroups");
  add_group(subgroups);
  subgroups->add_option("--subgroup-cap", opt.subgroup_cap, "Maximum group order to enumerate");

  std::vector<const char*> argv{"permpoly"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    const GroupSpec spec = parse_group_spec(opt.group);
    const PermGroup group = spec.build(opt.closure_cap);

    if (orbits->parsed()) {
      out << to_string(orbit_partition(group)) << "\n";
    } else if (stab->parsed()) {
      const auto result = partition_stabilizer(group, parse_partition(opt.partition, group.degree()));
      out << "order " << result.order() << "\n";
      for (const auto& g : result.elements()) out << to_string(g) << "\n";
    } else if (bary->parsed()) {
      const auto a = opt.oracle ? barycenter_by_sum(group) : barycenter_from_orbits(group);
      if (opt.json) {
        out << nlohmann::json(a).dump() << "\n";
      } else {
        print_matrix(out, a);
      }
    } else if (dim->parsed()) {
      out << affine_dimension(group) << "\n";
    } else if (face_test->parsed()) {
      const auto sub = PermGroup::generate(parse_generator_list(opt.subgroup, group.degree()),
                                           group.degree(), opt.closure_cap);
      std::optional<bool> comb;
      std::optional<bool> geo;
      if (opt.method != "lp") {
        comb = is_face_combinatorial(sub, group);
        out << "combinatorial: " << (*comb ? "face" : "not a face") << "\n";
      }
      if (opt.method != "comb") {
        auto verdict = is_face_geometric(sub, group);
        geo = verdict.is_face;
        out << "geometric: " << (verdict.is_face ? "face" : "not a face") << " (slack "
            << to_string(verdict.slack) << ")\n";
        if (verdict.certificate) print_certificate(out, *verdict.certificate);
      }
      if (comb && geo && *comb != *geo) return kDisagreement;
    } else if (faces->parsed()) {
      for (const auto& h : face_subgroups(group, opt.subgroup_cap)) {
        out << "order " << h.order() << "\torbits " << to_string(orbit_partition(h))
            << "\tgenerators ";
        print_generators(out, h);
        out << "\n";
      }
    } else if (verify->parsed()) {
      TheoremOptions options;
      options.subgroup_cap = opt.subgroup_cap;
      options.threads = opt.threads;
      const auto report = verify_theorem(group, spec.description, options);
      print_report(out, report);
      if (!opt.json_path.empty()) {
        std::ofstream file(opt.json_path);
        if (!file) {
          err << "error: cannot write " << opt.json_path << "\n";
          return kUsageError;
        }
        file << to_json(report).dump(2) << "\n";
      }
      return report.agreement ? kOk : kDisagreement;
    } else if (subgroups->parsed()) {
      const auto all = enumerate_subgroups(group, opt.subgroup_cap);
      for (const auto& h : all) {
        out << "order " << h.order() << "\tgenerators ";
        print_generators(out, h);
        out << "\n";
      }
      out << "subgroups " << all.size() << "\n";
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kOk;
}

}  // namespace permpoly::cli
