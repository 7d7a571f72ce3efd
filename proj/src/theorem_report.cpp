#include "permpoly/theorem_report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

#include "permpoly/errors.hpp"
#include "permpoly/polytope.hpp"

namespace permpoly {

namespace {

SubgroupRecord examine(const PermGroup& sub, const PermGroup& group, const TheoremOptions& options) {
  SubgroupRecord record;
  record.order = sub.order();
  record.generators = sub.generators();
  record.orbit_partition = orbit_partition(sub);
  const auto hull = partition_stabilizer(group, record.orbit_partition);
  record.stabilizer_order = hull.order();
  if (!sub.is_subgroup_of(hull) || orbit_partition(hull) != record.orbit_partition ||
      barycenter_from_orbits(hull) != barycenter_from_orbits(sub)) {
    throw std::logic_error("orbit-partition stabilizer of subgroup " +
                           to_string(record.orbit_partition) + " breaks its invariants");
  }
  record.combinatorial = is_face_combinatorial(sub, group);
  auto geometric = is_face_geometric(sub, group, options.lp_row_cap);
  record.geometric = geometric.is_face;
  record.certificate = std::move(geometric.certificate);
  return record;
}

}  // namespace

TheoremReport verify_theorem(const PermGroup& group, std::string description,
                             const TheoremOptions& options) {
  const auto subgroups = enumerate_subgroups(group, options.subgroup_cap);
  std::vector<SubgroupRecord> records(subgroups.size());

  std::size_t threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, subgroups.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t k = next++; k < subgroups.size(); k = next++) {
            records[k] = examine(subgroups[k], group, options);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  TheoremReport report;
  report.group = std::move(description);
  report.degree = group.degree();
  report.order = group.order();
  report.subgroup_count = records.size();
  for (const auto& r : records) {
    report.face_subgroup_count += r.geometric;
    report.agreement = report.agreement && r.combinatorial == r.geometric;
  }
  report.records = std::move(records);
  return report;
}

nlohmann::json to_json(const TheoremReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& block : r.orbit_partition.parts()) {
      nlohmann::json points = nlohmann::json::array();
      for (Point x : block) points.push_back(x + 1);
      parts.push_back(std::move(points));
    }
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : r.generators) gens.push_back(to_string(g));
    nlohmann::json record = {
        {"order", r.order},
        {"generators", std::move(gens)},
        {"orbit_partition", std::move(parts)},
        {"stabilizer_order", r.stabilizer_order},
        {"combinatorial", r.combinatorial},
        {"geometric", r.geometric},
    };
    if (r.certificate) {
      record["certificate"] = {{"c", r.certificate->functional},
                               {"b", to_string(r.certificate->level)}};
    }
    records.push_back(std::move(record));
  }
  return {
      {"group", report.group},
      {"degree", report.degree},
      {"order", report.order},
      {"subgroup_count", report.subgroup_count},
      {"face_subgroup_count", report.face_subgroup_count},
      {"agreement", report.agreement},
      {"records", std::move(records)},
  };
}

TheoremReport report_from_json(const nlohmann::json& j) {
  try {
    TheoremReport report;
    report.group = j.at("group").get<std::string>();
    report.degree = j.at("degree").get<std::size_t>();
    report.order = j.at("order").get<std::size_t>();
    report.subgroup_count = j.at("subgroup_count").get<std::size_t>();
    report.face_subgroup_count = j.at("face_subgroup_count").get<std::size_t>();
    report.agreement = j.at("agreement").get<bool>();
    for (const auto& jr : j.at("records")) {
      std::vector<std::vector<Point>> parts;
      for (const auto& block : jr.at("orbit_partition")) {
        auto& out = parts.emplace_back();
        for (const auto& x : block) {
          auto point = x.get<std::size_t>();
          if (point == 0) throw ParseError("orbit partition points are 1-indexed");
          out.push_back(static_cast<Point>(point - 1));
        }
      }
      SubgroupRecord record;
      record.order = jr.at("order").get<std::size_t>();
      record.orbit_partition = SetPartition(report.degree, std::move(parts));
      record.stabilizer_order = jr.at("stabilizer_order").get<std::size_t>();
      record.combinatorial = jr.at("combinatorial").get<bool>();
      record.geometric = jr.at("geometric").get<bool>();
      for (const auto& g : jr.at("generators")) {
        record.generators.push_back(parse_permutation(g.get<std::string>(), report.degree));
      }
      if (jr.contains("certificate")) {
        const auto& jc = jr.at("certificate");
        record.certificate = FaceCertificate{jc.at("c").get<RationalMatrix>(),
                                             parse_rational(jc.at("b").get<std::string>())};
      }
      report.records.push_back(std::move(record));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("theorem report: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("theorem report: ") + e.what());
  }
}

}  // namespace permpoly
