// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "cbqo/cancellation.hpp"
#include "cbqo/suites.hpp"

using namespace cbqo;
using io::json;

namespace {

struct Timed {
  suites::Result result;
  double         seconds = 0;
};

unsigned worker_count() {
  return std::max(1U, std::thread::hardware_concurrency());
}

Timed run(const std::string& name) {
  auto start = std::chrono::steady_clock::now();
  auto r     = suites::run_suite(name, {1, worker_count(), false, std::nullopt});
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  return {std::move(r), dt.count()};
}

std::size_t part_instances(const suites::Result& r, const std::string& part) {
  const auto& parts = r.details.at("parts");
  return parts.contains(part) ? parts.at(part).at("instances").get<std::size_t>() : 0;
}

struct Verdict {
  bool        pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

void suite_ok(Verdict& v, const Timed& t) {
  v.require(t.result.pass, t.result.name + " failed: " + t.result.counterexample.value_or("?"));
}

// Some cyclic word of each family contains `piece`.
bool piece_in_both(const Word& piece, const std::vector<Word>& left, const std::vector<Word>& right) {
  auto in = [&](const std::vector<Word>& side) {
    for (const auto& r : side) {
      for (const Word& base : {r, invert(r)}) {
        if (contains_subword(concat(base, base), piece)) {
          return true;
        }
      }
    }
    return false;
  };
  return in(left) && in(right);
}

}  // namespace

int main() {
  using Check = std::function<Verdict(double&)>;
  std::vector<std::pair<std::string, Check>> criteria;

  criteria.emplace_back("C'(1/6) for graph groups", [](double& s) {
    Verdict v;
    auto    t = run("cprime-graph");
    s         = t.seconds;
    suite_ok(v, t);
    v.require(part_instances(t.result, "exhaustive") == 11, "expected 11 graphs on at most 3 vertices");
    v.require(part_instances(t.result, "random") == 100, "expected 100 random graphs");
    v.require(t.seconds < 10, "runtime " + secs(t.seconds) + " >= 10s");
    return v;
  });

  criteria.emplace_back("C'(1/8) for tree groups", [](double& s) {
    Verdict v;
    auto    t = run("cprime-tree");
    s         = t.seconds;
    suite_ok(v, t);
    v.require(part_instances(t.result, "exhaustive-depth2") == 26, "expected 25 trees and the empty set at depth 2");
    v.require(part_instances(t.result, "random-depth3") == 20, "expected 20 random depth-3 trees");
    v.require(t.seconds < 120, "runtime " + secs(t.seconds) + " >= 120s");
    return v;
  });

  criteria.emplace_back("overlap constants", [](double& s) {
    Verdict v;
    auto    t = run("overlap");
    s         = t.seconds;
    suite_ok(v, t);
    auto eps   = t.result.details.at("epsilon_max_piece").get<std::size_t>();
    auto cross = t.result.details.at("cross_branch_piece").get<std::size_t>();
    v.require(eps <= 6, "power-relator piece " + std::to_string(eps) + " > 6");
    v.require(cross == 5, "cross-branch piece " + std::to_string(cross) + " != 5");
    std::vector<Word> zero{cancel::f0().x_image, cancel::f0().y_image};
    std::vector<Word> one{cancel::f1().x_image, cancel::f1().y_image};
    bool              named = piece_in_both(Word::parse("xyxxx"), zero, one)
                 || piece_in_both(Word::parse("yxyyy"), zero, one);
    v.require(named, "neither xyx^3 nor yxy^3 is a common piece");
    v.note += v.note.empty() ? "" : "; ";
    v.note += "power-relator max " + std::to_string(eps) + ", cross-branch " + std::to_string(cross);
    return v;
  });

  criteria.emplace_back("lineup / functioncyclic / cyclesubword / composed", [](double& s) {
    Verdict v;
    double  total = 0;
    const std::vector<std::pair<std::string, std::string>> parts{
        {"lineup", "random-subword"},
        {"functioncyclic", "random"},
        {"cyclesubword", "random"},
        {"composed", "random-cuts"}};
    for (const auto& [name, random_part] : parts) {
      auto t = run(name);
      total += t.seconds;
      suite_ok(v, t);
      v.require(part_instances(t.result, random_part) >= 500, name + " has fewer than 500 random instances");
      v.require(part_instances(t.result, "exhaustive") > 0, name + " has no exhaustive part");
    }
    s = total;
    v.require(total < 60, "runtime " + secs(total) + " >= 60s");
    return v;
  });

  criteria.emplace_back("itsahom set identity", [](double& s) {
    Verdict v;
    auto    t = run("itsahom");
    s         = t.seconds;
    suite_ok(v, t);
    v.require(t.result.instances > 0, "no instances");
    return v;
  });

  criteria.emplace_back("outline trees", [](double& s) {
    Verdict v;
    auto    t = run("outline");
    s         = t.seconds;
    suite_ok(v, t);
    v.require(t.result.instances == 1000, "expected 1000 pairs");
    return v;
  });

  criteria.emplace_back("encoding-chain oracle agreement", [](double& s) {
    Verdict v;
    auto    t = run("encoding-chain");
    s         = t.seconds;
    suite_ok(v, t);
    v.require(t.result.instances == 500, "expected 500 pairs");
    return v;
  });

  criteria.emplace_back("star-map equivariance", [](double& s) {
    Verdict v;
    auto    t = run("star");
    s         = t.seconds;
    suite_ok(v, t);
    v.require(part_instances(t.result, "equivariance") == 100, "expected 100 random p");
    v.require(part_instances(t.result, "fixed") > 0, "missing the fixed check at b");
    return v;
  });

  criteria.emplace_back("FM round trip", [](double& s) {
    Verdict v;
    auto    t = run("fm");
    s         = t.seconds;
    suite_ok(v, t);
    auto counts = t.result.details.at("quasi_orders_by_size");
    v.require(part_instances(t.result, "random-5") == 200, "expected 200 random 5-point quasi-orders");
    v.note += v.note.empty() ? "" : "; ";
    v.note += "quasi-orders by size " + counts.dump();
    return v;
  });

  criteria.emplace_back("orders via Dehn", [](double& s) {
    Verdict v;
    auto    t = run("orders");
    s         = t.seconds;
    suite_ok(v, t);
    v.require(part_instances(t.result, "tree-groups") == 26, "expected 26 depth-2 tree groups");
    v.require(t.seconds < 120, "runtime " + secs(t.seconds) + " >= 120s");
    return v;
  });

  criteria.emplace_back("decode/build round trips", [](double& s) {
    Verdict v;
    auto    t = run("roundtrip");
    s         = t.seconds;
    suite_ok(v, t);
    v.require(part_instances(t.result, "tree") == 100 && part_instances(t.result, "graph") == 100,
              "expected 100 trees and 100 graphs");
    return v;
  });

  criteria.emplace_back("relator-mapping dual paths", [](double& s) {
    Verdict v;
    auto    t = run("relmap");
    s         = t.seconds;
    suite_ok(v, t);
    v.require(t.result.instances == 200, "expected 200 instances");
    return v;
  });

  criteria.emplace_back("surjectivity probe", [](double& s) {
    Verdict v;
    auto    t = run("surjprobe");
    s         = t.seconds;
    suite_ok(v, t);
    return v;
  });

  criteria.emplace_back("symmetrization identity", [](double& s) {
    Verdict v;
    auto    t = run("symmetrize");
    s         = t.seconds;
    suite_ok(v, t);
    v.require(t.result.instances == 100, "expected 100 instances");
    return v;
  });

  criteria.emplace_back("K-map identities", [](double& s) {
    Verdict v;
    auto    t = run("kmap");
    s         = t.seconds;
    suite_ok(v, t);
    v.require(t.seconds < 60, "runtime " + secs(t.seconds) + " >= 60s");
    return v;
  });

  bool   all   = true;
  double total = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    double  seconds = 0;
    Verdict v;
    try {
      v = criteria[i].second(seconds);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    total += seconds;
    all = all && v.pass;
    std::printf("%s %2zu %s (%s)%s%s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                secs(seconds).c_str(), v.note.empty() ? "" : ": ", v.note.c_str());
  }
  bool in_budget = total < 360;
  std::printf("%s total %s (limit 360s)\n", in_budget ? "PASS" : "FAIL", secs(total).c_str());
  return all && in_budget ? 0 : 1;
}
