// Command-line frontend. One binary, one subcommand per library area, with
// text / csv / records (JSON lines) output so results can be scripted and
// diffed. Run `pbm verify` for the full self-check suite.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pbm/classify.hpp"
#include "pbm/mu.hpp"
#include "pbm/semigroup.hpp"
#include "pbm/variant.hpp"
#include "pbm/verify.hpp"

using json = nlohmann::json;

namespace {

struct GlobalOpts {
  std::string format = "text";
  int max_n = -1;  // -1: library defaults
};

pbm::EnumerationBounds bounds_from(const GlobalOpts& g) {
  pbm::EnumerationBounds b;
  if (g.max_n >= 0) {
    b.max_n_full_monoid = g.max_n;
    b.max_n_cayley = g.max_n;
    b.max_n_pb_pairs = std::max(b.max_n_pb_pairs, g.max_n);
  }
  return b;
}

void add_common(CLI::App* cmd, GlobalOpts& g) {
  cmd->add_option("--format", g.format, "output format: text, csv, or records")
      ->check(CLI::IsMember({"text", "csv", "records"}));
  cmd->add_option("--max-n", g.max_n, "raise the enumeration/table size bounds");
}

json partition_json(const pbm::Partition& p) {
  json blocks = json::array();
  for (const auto& block : p.blocks()) blocks.push_back(block);
  return json{{"n", p.n()}, {"blocks", blocks}};
}

const char* status_name(pbm::IsoStatus s) {
  switch (s) {
    case pbm::IsoStatus::Isomorphic: return "isomorphic";
    case pbm::IsoStatus::NotIsomorphic: return "not_isomorphic";
    case pbm::IsoStatus::ConjecturalEqualInvariants:
      return "conjectural(equal_invariants)";
    case pbm::IsoStatus::ConjecturalDistinctInvariants:
      return "conjectural(distinct_invariants)";
  }
  return "?";
}

json invariants_json(const pbm::InvariantTuple& t) {
  return json{{"n", t.n}, {"r", t.r}, {"k", t.k}, {"p", t.p}};
}

int run_enumerate(const GlobalOpts& g, int n, std::optional<int> rank,
                  std::optional<int> ker, std::optional<int> coker, bool count_only) {
  auto bounds = bounds_from(g);
  std::vector<pbm::Partition> elems =
      pbm::partitions_filtered(n, rank, ker, coker, bounds);
  if (count_only) {
    std::cout << elems.size() << "\n";
    return 0;
  }
  for (const auto& p : elems) {
    if (g.format == "records")
      std::cout << partition_json(p).dump() << "\n";
    else
      std::cout << pbm::to_string(p) << "\n";
  }
  return 0;
}

int run_product(const GlobalOpts& g, const std::string& a, const std::string& b) {
  pbm::Partition result = pbm::product(pbm::parse_partition(a), pbm::parse_partition(b));
  if (g.format == "records")
    std::cout << partition_json(result).dump() << "\n";
  else
    std::cout << pbm::to_string(result) << "\n";
  return 0;
}

int run_stats(const GlobalOpts& g, const std::string& text) {
  pbm::Partition p = pbm::parse_partition(text);
  pbm::PartitionStats s = pbm::stats(p);
  if (g.format == "records") {
    json rec{{"n", p.n()},
             {"rank", s.rank},
             {"dom", s.dom},
             {"codom", s.codom},
             {"ker_classes", s.ker_classes},
             {"coker_classes", s.coker_classes},
             {"upper_nontransversals", s.upper_nontransversals},
             {"lower_nontransversals", s.lower_nontransversals},
             {"ker_singletons", s.ker_singletons},
             {"coker_singletons", s.coker_singletons}};
    std::cout << rec.dump() << "\n";
    return 0;
  }
  auto show = [](const std::vector<int>& xs) {
    std::string out = "{";
    for (size_t i = 0; i < xs.size(); ++i)
      out += (i ? "," : "") + std::to_string(xs[i]);
    return out + "}";
  };
  std::cout << "rank " << s.rank << "\n";
  std::cout << "dom " << show(s.dom) << " codom " << show(s.codom) << "\n";
  std::cout << "ker singletons " << s.ker_singletons << ", coker singletons "
            << s.coker_singletons << "\n";
  return 0;
}

int run_mu(int n, int k, int r, int q, bool oracle, const GlobalOpts& g) {
  std::cout << pbm::mu(n, k, r, q).str() << "\n";
  if (oracle) {
    pbm::BigInt brute = pbm::mu_bruteforce(n, k, r, q, bounds_from(g));
    std::cout << "oracle " << brute.str()
              << (brute == pbm::mu(n, k, r, q) ? " (match)" : " (MISMATCH)") << "\n";
    return brute == pbm::mu(n, k, r, q) ? 0 : 1;
  }
  return 0;
}

int run_mu_table(const GlobalOpts& g, int n, bool oracle) {
  std::cout << "n,k,r,q,mu" << (oracle ? ",oracle,match" : "") << "\n";
  bool all_match = true;
  for (int m = 0; m <= n; ++m) {
    for (int k = m % 2; k <= m; k += 2) {
      for (int r = 0; r <= k; ++r) {
        for (int q = 0; q <= r; ++q) {
          pbm::BigInt value = pbm::mu(m, k, r, q);
          std::cout << m << "," << k << "," << r << "," << q << "," << value.str();
          if (oracle) {
            pbm::BigInt brute = pbm::mu_bruteforce(m, k, r, q, bounds_from(g));
            bool match = brute == value;
            all_match = all_match && match;
            std::cout << "," << brute.str() << "," << (match ? "yes" : "NO");
          }
          std::cout << "\n";
        }
      }
    }
  }
  return all_match ? 0 : 1;
}

int run_join(const GlobalOpts& g, const std::string& a, const std::string& b) {
  pbm::PBPair p1 = pbm::parse_pb_pair(a), p2 = pbm::parse_pb_pair(b);
  pbm::JoinResult res = pbm::join(p1, p2);
  if (g.format == "records") {
    json pairs = json::array();
    for (auto [x, y] : res.domain_pairs) pairs.push_back(json::array({x, y}));
    json rec{{"rank", res.rank},
             {"Z", pairs},
             {"classes", res.classes},
             {"paths", res.paths}};
    std::cout << rec.dump() << "\n";
    return 0;
  }
  std::cout << "rank " << res.rank << "\n";
  std::cout << "Z";
  for (auto [x, y] : res.domain_pairs) std::cout << " (" << x << "," << y << ")";
  std::cout << "\npaths";
  for (const auto& path : res.paths) {
    std::cout << " [";
    for (size_t i = 0; i < path.size(); ++i) std::cout << (i ? " " : "") << path[i];
    std::cout << "]";
  }
  std::cout << "\n";
  return 0;
}

int run_green(const GlobalOpts& g, const std::string& alpha_text,
              const std::string& x_text, const std::string& kind_text) {
  pbm::Variant v(pbm::parse_partition(alpha_text));
  pbm::Partition x = pbm::parse_partition(x_text);
  pbm::GreenKind kind;
  if (kind_text == "R") kind = pbm::GreenKind::R;
  else if (kind_text == "L") kind = pbm::GreenKind::L;
  else if (kind_text == "H") kind = pbm::GreenKind::H;
  else if (kind_text == "D") kind = pbm::GreenKind::D;
  else if (kind_text == "J") kind = pbm::GreenKind::J;
  else throw pbm::ValidationError("unknown relation '" + kind_text + "'");
  std::vector<pbm::Partition> cls = pbm::variant_green_class(v, x, kind, bounds_from(g));
  for (const auto& member : cls) {
    if (g.format == "records")
      std::cout << partition_json(member).dump() << "\n";
    else
      std::cout << pbm::to_string(member) << "\n";
  }
  return 0;
}

int run_psets(const GlobalOpts& g, const std::string& alpha_text) {
  pbm::Variant v(pbm::parse_partition(alpha_text));
  auto bounds = bounds_from(g);
  pbm::PSets sets = pbm::p_sets(v, bounds);
  std::vector<pbm::Partition> elems = pbm::all_partitions(v.n(), bounds);
  auto dump = [&](const char* name, const std::vector<int>& idx) {
    if (g.format == "records") {
      json members = json::array();
      for (int i : idx) members.push_back(pbm::to_string(elems[static_cast<size_t>(i)]));
      std::cout << json{{"set", name}, {"size", idx.size()}, {"members", members}}.dump()
                << "\n";
      return;
    }
    std::cout << name << " size " << idx.size() << ":";
    for (int i : idx) std::cout << " " << pbm::to_string(elems[static_cast<size_t>(i)]);
    std::cout << "\n";
  };
  dump("P1", sets.p1);
  dump("P2", sets.p2);
  dump("P3", sets.p3);
  dump("P", sets.p);
  return 0;
}

int run_table(const GlobalOpts& g, const std::string& alpha_text) {
  pbm::FiniteSemigroup s =
      pbm::build_table(pbm::Variant(pbm::parse_partition(alpha_text)), bounds_from(g));
  // CSV: header row/column are the element labels
  std::cout << "*";
  for (int j = 0; j < s.size(); ++j)
    std::cout << "," << s.labels()[static_cast<size_t>(j)];
  std::cout << "\n";
  for (int i = 0; i < s.size(); ++i) {
    std::cout << s.labels()[static_cast<size_t>(i)];
    for (int j = 0; j < s.size(); ++j)
      std::cout << "," << s.labels()[static_cast<size_t>(s.apply(i, j))];
    std::cout << "\n";
  }
  return 0;
}

int run_iso(const GlobalOpts& g, const std::string& a_text, const std::string& b_text) {
  auto bounds = bounds_from(g);
  pbm::FiniteSemigroup sa = pbm::build_table(pbm::Variant(pbm::parse_partition(a_text)), bounds);
  pbm::FiniteSemigroup sb = pbm::build_table(pbm::Variant(pbm::parse_partition(b_text)), bounds);
  auto result = pbm::find_isomorphism(sa, sb);
  if (g.format == "records") {
    json rec{{"isomorphic", result.has_value()}};
    if (result) rec["bijection"] = *result;
    std::cout << rec.dump() << "\n";
  } else if (result) {
    std::cout << "isomorphic\n";
    for (size_t i = 0; i < result->size(); ++i)
      std::cout << sa.labels()[i] << " -> "
                << sb.labels()[static_cast<size_t>((*result)[i])] << "\n";
  } else {
    std::cout << "none\n";
  }
  return 0;
}

int run_classify(const GlobalOpts& g, const std::string& a_text,
                 const std::string& b_text, bool oracle) {
  pbm::Partition alpha = pbm::parse_partition(a_text);
  pbm::Partition beta = pbm::parse_partition(b_text);
  pbm::IsoVerdict v = pbm::decide_isomorphism(alpha, beta, oracle, bounds_from(g));
  if (g.format == "records") {
    json rec{{"verdict", status_name(v.status)},
             {"alpha_invariants", invariants_json(v.alpha_invariants)},
             {"beta_invariants", invariants_json(v.beta_invariants)},
             {"oracle_used", v.oracle_used}};
    if (v.conjugators) {
      rec["pi1"] = v.conjugators->first;
      rec["pi2"] = v.conjugators->second;
    }
    if (v.oracle_map) rec["oracle_bijection"] = *v.oracle_map;
    std::cout << rec.dump() << "\n";
    return 0;
  }
  std::cout << status_name(v.status) << "\n";
  auto show_tuple = [](const char* name, const pbm::InvariantTuple& t) {
    std::cout << name << ": n=" << t.n << " r=" << t.r << " k=" << t.k << " p=" << t.p
              << "\n";
  };
  show_tuple("alpha", v.alpha_invariants);
  show_tuple("beta", v.beta_invariants);
  if (v.conjugators) {
    auto show_perm = [](const char* name, const std::vector<int>& perm) {
      std::cout << name << ":";
      for (size_t i = 0; i < perm.size(); ++i)
        std::cout << " " << i + 1 << "->" << perm[i] + 1;
      std::cout << "\n";
    };
    show_perm("pi1", v.conjugators->first);
    show_perm("pi2", v.conjugators->second);
  }
  if (v.oracle_used)
    std::cout << "oracle: " << (v.oracle_map ? "bijection found" : "none") << "\n";
  return 0;
}

int run_verify(int max_n, int mu_max_n, int jobs, std::uint64_t seed) {
  pbm::VerifyOptions opts;
  opts.max_n = max_n;
  opts.mu_oracle_max_n = mu_max_n;
  opts.jobs = jobs;
  opts.seed = seed;
  std::vector<pbm::CheckResult> results = pbm::run_verification(opts);
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "ok   " : "FAIL ") << r.name;
    if (!r.pass) std::cout << ": " << r.detail;
    std::cout << "\n";
    all = all && r.pass;
  }
  std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial Brauer monoids, their sandwich variants, and the "
               "classification toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;

  // enumerate
  int en_n = 0;
  std::optional<int> en_rank, en_ker, en_coker;
  bool en_count = false;
  auto* enumerate = app.add_subcommand("enumerate", "list the elements of PB_n");
  enumerate->add_option("--n", en_n, "ground size")->required();
  enumerate->add_option("--rank", en_rank, "keep only this rank");
  enumerate->add_option("--ker-singletons", en_ker, "keep only this kernel singleton count");
  enumerate->add_option("--coker-singletons", en_coker,
                        "keep only this cokernel singleton count");
  enumerate->add_flag("--count-only", en_count, "print the count instead of elements");
  add_common(enumerate, g);

  // product
  std::string pr_a, pr_b;
  auto* productc = app.add_subcommand("product", "multiply two partitions");
  productc->add_option("--alpha", pr_a, "left factor")->required();
  productc->add_option("--beta", pr_b, "right factor")->required();
  add_common(productc, g);

  // stats
  std::string st_a;
  auto* statsc = app.add_subcommand("stats", "per-element combinatorics");
  statsc->add_option("--alpha", st_a, "the partition")->required();
  add_common(statsc, g);

  // mu
  int mu_n = 0, mu_k = 0, mu_r = 0, mu_q = 0;
  bool mu_oracle = false;
  auto* muc = app.add_subcommand("mu", "evaluate the class-counting number");
  muc->add_option("--n", mu_n)->required();
  muc->add_option("--k", mu_k)->required();
  muc->add_option("--r", mu_r)->required();
  muc->add_option("--q", mu_q)->required();
  muc->add_flag("--oracle", mu_oracle, "also count by brute force and compare");
  add_common(muc, g);

  // mu-table
  int mt_n = 0;
  bool mt_oracle = false;
  auto* mutab = app.add_subcommand("mu-table", "CSV dump of values up to n");
  mutab->add_option("--n", mt_n, "largest ground size")->required();
  mutab->add_flag("--oracle", mt_oracle, "add brute-force column and match flag");
  add_common(mutab, g);

  // join
  std::string jn_a, jn_b;
  auto* joinc = app.add_subcommand("join", "join two PB-pairs");
  joinc->add_option("pair1", jn_a, "first PB-pair, e.g. \"13;eq=[[3,8]];X=[1,2,9]\"")
      ->required();
  joinc->add_option("pair2", jn_b, "second PB-pair")->required();
  add_common(joinc, g);

  // green
  std::string gr_alpha, gr_x, gr_kind = "R";
  auto* greenc = app.add_subcommand("green", "a Green's class of the variant");
  greenc->add_option("--alpha", gr_alpha, "sandwich element")->required();
  greenc->add_option("--class-of", gr_x, "element whose class to compute")->required();
  greenc->add_option("--kind", gr_kind, "R, L, H, D, or J")->required();
  add_common(greenc, g);

  // psets
  std::string ps_alpha;
  auto* psetsc = app.add_subcommand("psets", "the four P-sets of the variant");
  psetsc->add_option("--alpha", ps_alpha, "sandwich element")->required();
  add_common(psetsc, g);

  // table
  std::string tb_alpha;
  auto* tablec = app.add_subcommand("table", "CSV Cayley table of the variant");
  tablec->add_option("--alpha", tb_alpha, "sandwich element")->required();
  add_common(tablec, g);

  // iso
  std::string iso_a, iso_b;
  auto* isoc = app.add_subcommand("iso", "table-based isomorphism search");
  isoc->add_option("--alpha", iso_a, "first sandwich element")->required();
  isoc->add_option("--beta", iso_b, "second sandwich element")->required();
  add_common(isoc, g);

  // classify
  std::string cl_a, cl_b;
  bool cl_oracle = false;
  auto* classifyc = app.add_subcommand("classify", "isomorphism verdict for two variants");
  classifyc->add_option("--alpha", cl_a, "first sandwich element")->required();
  classifyc->add_option("--beta", cl_b, "second sandwich element")->required();
  classifyc->add_flag("--oracle", cl_oracle, "force the table-based check");
  add_common(classifyc, g);

  // verify
  int vf_max_n = 3, vf_mu_n = 6, vf_jobs = 1;
  std::uint64_t vf_seed = 0x5eed0f42u;
  auto* verifyc = app.add_subcommand("verify", "run the full property suite");
  verifyc->add_option("--max-n", vf_max_n, "cap for enumeration/table sweeps");
  verifyc->add_option("--mu-max-n", vf_mu_n, "cap for the mu brute-force comparison");
  verifyc->add_option("--jobs", vf_jobs, "worker threads")->check(CLI::PositiveNumber);
  verifyc->add_option("--seed", vf_seed, "seed for randomized spot checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) return run_enumerate(g, en_n, en_rank, en_ker, en_coker, en_count);
    if (*productc) return run_product(g, pr_a, pr_b);
    if (*statsc) return run_stats(g, st_a);
    if (*muc) return run_mu(mu_n, mu_k, mu_r, mu_q, mu_oracle, g);
    if (*mutab) return run_mu_table(g, mt_n, mt_oracle);
    if (*joinc) return run_join(g, jn_a, jn_b);
    if (*greenc) return run_green(g, gr_alpha, gr_x, gr_kind);
    if (*psetsc) return run_psets(g, ps_alpha);
    if (*tablec) return run_table(g, tb_alpha);
    if (*isoc) return run_iso(g, iso_a, iso_b);
    if (*classifyc) return run_classify(g, cl_a, cl_b, cl_oracle);
    if (*verifyc) return run_verify(vf_max_n, vf_mu_n, vf_jobs, vf_seed);
  } catch (const pbm::BoundError& e) {
    std::cerr << "error: " << e.what() << " (raise --max-n)\n";
    return 2;
  } catch (const pbm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
