// Command-line front end for the lattice path matroid library.
//
// Exit codes: 0 success, 1 negative verdict, 2 usage or input error,
// 3 internal invariant breach (a verification suite found a mismatch).

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lpm/lpm.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBreach = 3;

std::vector<lpm::Lpm> parse_all(const std::vector<std::string>& texts) {
  std::vector<lpm::Lpm> out;
  for (const auto& t : texts) out.push_back(lpm::parse_lpm(t));
  return out;
}

/// Adds U_{0,n} and U_{n,n} around the given constituents when missing.
std::vector<lpm::Lpm> pad_chain(std::vector<lpm::Lpm> chain) {
  if (chain.empty()) throw lpm::ArgumentError("no constituents given");
  const int n = chain.front().n();
  if (chain.front().rank() != 0) chain.insert(chain.begin(), lpm::Lpm::uniform(0, n));
  if (chain.back().rank() != n) chain.push_back(lpm::Lpm::uniform(n, n));
  return chain;
}

void print_json(const lpm::Json& j) { std::cout << j.dump(2) << '\n'; }

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice path matroids: quotients, posets, flags and diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON output");

  // quotient
  auto* quotient = app.add_subcommand("quotient", "Decide whether SUB is a quotient of M");
  std::string q_sub, q_m;
  bool q_oracle = false;
  quotient->add_option("sub", q_sub, "LPM such as M[1,2|6,8]@8")->required();
  quotient->add_option("matroid", q_m, "LPM")->required();
  quotient->add_flag("--oracle", q_oracle, "Also run the basis-exchange check");

  // bases
  auto* bases_cmd = app.add_subcommand("bases", "List the bases of an LPM");
  std::string b_m;
  bool b_count = false;
  bases_cmd->add_option("matroid", b_m, "LPM")->required();
  bases_cmd->add_flag("--count", b_count, "Print only the number of bases");

  // poset
  auto* poset = app.add_subcommand("poset", "Build the quotient poset of all LPMs on [n]");
  int p_n = 3;
  std::string p_format = "text";
  poset->add_option("--n", p_n, "Ground set size")->required()->check(CLI::Range(0, 9));
  poset->add_option("--format", p_format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  std::vector<std::string> p_interval;
  int p_rank = -1;
  poset->add_option("--interval", p_interval, "BOTTOM TOP: report the interval instead")->expected(2);
  poset->add_option("--weak-maxima", p_rank, "With --interval: weak-order maxima of this rank");

  // narayana
  auto* nara = app.add_subcommand("narayana", "Rank counts of the quotient poset");
  int n_n = 3;
  bool n_check = false;
  nara->add_option("--n", n_n, "Ground set size")->required()->check(CLI::Range(1, 30));
  nara->add_flag("--check", n_check, "Also build the poset and compare");

  // flags
  auto* flags = app.add_subcommand("flags", "Flags of bases of an LPFM");
  std::vector<std::string> f_chain, f_pair;
  flags->add_option("constituents", f_chain, "LPMs of the chain (U_{0,n}, U_{n,n} added if missing)");
  flags->add_option("--gale-pair", f_pair, "LOW HIGH Gale permutations: build M[B_k, B'_k]")->expected(2);

  // bruhat
  auto* bruhat = app.add_subcommand("bruhat", "Strong Bruhat order on permutations");
  std::string br_u, br_v;
  bruhat->add_option("u", br_u, "Permutation such as 1243")->required();
  bruhat->add_option("v", br_v, "Permutation such as 4213")->required();

  // arrows
  auto* arrows = app.add_subcommand("arrows", "Decorated permutation and row/column intervals");
  std::string a_m, a_sub;
  arrows->add_option("matroid", a_m, "LPM")->required();
  arrows->add_option("--sub", a_sub, "Test the interval-union condition for this LPM");

  // dyck
  auto* dyck = app.add_subcommand("dyck", "Dyck path of an LPM, or the LPM of a Dyck path");
  std::string d_m, d_path;
  int d_n = -1;
  dyck->add_option("matroid", d_m, "LPM");
  dyck->add_option("--path", d_path, "Steps over N and E; needs --n");
  dyck->add_option("--n", d_n, "Ground set size for --path");

  // diagram
  auto* diagram = app.add_subcommand("diagram", "Diagram of an LPM, or of a partial LPFM");
  std::vector<std::string> g_chain;
  std::string g_basis, g_format = "text";
  diagram->add_option("matroids", g_chain, "One LPM, or the constituents of a flag")->required();
  diagram->add_option("--basis", g_basis, "Overlay this basis (single LPM only)");
  diagram->add_option("--format", g_format, "text or svg")->check(CLI::IsMember({"text", "svg"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run the exhaustive cross-checks");
  int v_max = 4;
  verify->add_option("--max-n", v_max, "Largest ground set size")->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*quotient) {
      const auto sub = lpm::parse_lpm(q_sub), m = lpm::parse_lpm(q_m);
      const auto v = lpm::explain_quotient(sub, m);
      std::optional<bool> oracle;
      if (q_oracle) oracle = lpm::is_quotient_oracle(sub, m);
      if (json) {
        auto j = lpm::verdict_json(sub, m, v);
        if (oracle) j["oracle"] = *oracle;
        print_json(j);
      } else {
        std::cout << (v.quotient ? "true" : "false") << '\n';
        if (v.pairing) std::cout << "pairing " << v.pairing->to_string() << '\n';
        if (v.failing_pair)
          std::cout << "failing pair (" << v.failing_pair->ell << "," << v.failing_pair->u << ")\n";
        if (!v.quotient) std::cout << "reason " << v.reason << '\n';
        if (oracle) std::cout << "oracle " << (*oracle ? "true" : "false") << '\n';
      }
      if (oracle && *oracle != v.quotient) return kBreach;
      return v.quotient ? kOk : kNegative;
    }

    if (*bases_cmd) {
      const auto m = lpm::parse_lpm(b_m);
      if (b_count) {
        if (json) print_json({{"matroid", lpm::lpm_json(m)}, {"count", lpm::count_bases(m)}});
        else std::cout << lpm::count_bases(m) << '\n';
        return kOk;
      }
      const auto all = lpm::enumerate_bases(m);
      if (json) {
        lpm::Json list = lpm::Json::array();
        for (const auto& b : all) list.push_back(lpm::subset_json(b));
        print_json({{"matroid", lpm::lpm_json(m)}, {"bases", list}});
      } else {
        for (const auto& b : all) std::cout << b.to_compact() << '\n';
      }
      return kOk;
    }

    if (*poset) {
      const auto p = lpm::build_poset(p_n);
      if (!p_interval.empty()) {
        const auto bottom = lpm::parse_lpm(p_interval[0]), top = lpm::parse_lpm(p_interval[1]);
        if (bottom.n() != p_n || top.n() != p_n) throw lpm::ArgumentError("interval endpoints must live on [--n]");
        const auto ids = lpm::interval_nodes(p, bottom, top);
        const auto chains = lpm::maximal_chains(p, bottom, top);
        const auto hist = lpm::interval_rank_counts(p, bottom, top);
        std::vector<lpm::Lpm> maxima;
        if (p_rank >= 0) maxima = lpm::weak_maxima_in_interval(p, bottom, top, p_rank);
        if (json) {
          lpm::Json nodes = lpm::Json::array(), mx = lpm::Json::array();
          for (auto id : ids) nodes.push_back(lpm::lpm_json(p.node(id)));
          for (const auto& m : maxima) mx.push_back(lpm::lpm_json(m));
          lpm::Json out{{"bottom", lpm::lpm_json(bottom)}, {"top", lpm::lpm_json(top)}, {"nodes", nodes},
                        {"rank_counts", hist}, {"maximal_chains", chains}};
          if (p_rank >= 0) out["weak_maxima"] = mx;
          print_json(out);
        } else {
          std::cout << "nodes " << ids.size() << "\nrank counts " << join(hist) << "\nmaximal chains " << chains << '\n';
          if (p_rank >= 0) {
            std::cout << "weak maxima of rank " << p_rank << ":\n";
            for (const auto& m : maxima) std::cout << "  " << m.to_string() << '\n';
          }
        }
        return kOk;
      }
      if (p_format == "dot") std::cout << lpm::to_dot(p);
      else if (p_format == "json" || json) print_json(lpm::poset_json(p));
      else {
        for (int r = p.n(); r >= 0; --r) {
          std::cout << "rank " << r << ":";
          for (lpm::QuotientPoset::NodeId id = 0; id < p.size(); ++id)
            if (p.rank(id) == r) std::cout << ' ' << p.node(id).to_short_string();
          std::cout << '\n';
        }
        std::cout << "covers " << p.covers().size() << '\n';
      }
      return kOk;
    }

    if (*nara) {
      const auto predicted = lpm::predicted_rank_counts(n_n);
      std::optional<bool> agrees;
      if (n_check) {
        if (n_n > 9) throw lpm::ArgumentError("--check builds the poset and is limited to n <= 9");
        agrees = lpm::rank_counts(lpm::build_poset(n_n)) == predicted;
      }
      if (json) {
        lpm::Json out{{"n", n_n}, {"rank_counts", predicted}, {"total", lpm::catalan(n_n + 1)}};
        if (agrees) out["poset_agrees"] = *agrees;
        print_json(out);
      } else {
        std::cout << join(predicted) << '\n';
        if (agrees) std::cout << "poset " << (*agrees ? "agrees" : "DISAGREES") << '\n';
      }
      return agrees && !*agrees ? kBreach : kOk;
    }

    if (*flags) {
      std::optional<lpm::Lpfm> f;
      if (!f_pair.empty()) {
        const auto low = lpm::flag_of_perm(lpm::parse_permutation(f_pair[0]));
        const auto high = lpm::flag_of_perm(lpm::parse_permutation(f_pair[1]));
        f = lpm::lpfm_from_flag_pair(low, high);
        if (!f) {
          if (json) print_json({{"lpfm", nullptr}});
          else std::cout << "not an LPFM: some M[B_k,B'_k] is not a quotient of the next\n";
          return kNegative;
        }
      } else {
        f = lpm::Lpfm(pad_chain(parse_all(f_chain)));
      }
      const auto all = lpm::flags_of_lpfm(*f);
      const auto vertices = lpm::polytope_vertices(*f);
      if (json) {
        lpm::Json list = lpm::Json::array(), chain = lpm::Json::array();
        for (const auto& g : all) list.push_back(lpm::flag_json(g));
        for (const auto& m : f->constituents()) chain.push_back(lpm::lpm_json(m));
        print_json({{"lpfm", chain}, {"flags", list}, {"vertices", lpm::points_json(vertices)}});
      } else {
        std::cout << "lpfm " << f->to_string() << '\n';
        for (const auto& g : all)
          std::cout << g.to_string() << "  gale " << lpm::gale_perm(g).to_string() << "  bruhat "
                    << lpm::bruhat_perm(g).to_string() << '\n';
        std::cout << "flags " << all.size() << "\nvertices";
        for (const auto& v : vertices) std::cout << ' ' << v.to_string();
        std::cout << '\n';
      }
      return kOk;
    }

    if (*bruhat) {
      const auto u = lpm::parse_permutation(br_u), v = lpm::parse_permutation(br_v);
      const bool leq = lpm::bruhat_leq(u, v);
      std::vector<lpm::Permutation> interval;
      std::optional<bool> good;
      if (leq) {
        interval = lpm::bruhat_interval(u, v);
        good = lpm::good_interval_bruhat(v, u);
      }
      if (json) {
        lpm::Json list = lpm::Json::array();
        for (const auto& w : interval) list.push_back(w.to_comma_string());
        lpm::Json out{{"u", u.to_comma_string()}, {"v", v.to_comma_string()}, {"leq", leq}, {"cover", lpm::bruhat_cover(u, v)},
                      {"interval", list}};
        out["lpfm_interval"] = good ? lpm::Json(*good) : lpm::Json(nullptr);
        print_json(out);
      } else {
        std::cout << (leq ? "true" : "false") << '\n';
        if (leq) {
          std::cout << "interval " << interval.size() << ':';
          for (const auto& w : interval) std::cout << ' ' << w.to_string();
          std::cout << "\nlpfm interval " << (*good ? "true" : "false") << '\n';
        }
      }
      return leq ? kOk : kNegative;
    }

    if (*arrows) {
      const auto m = lpm::parse_lpm(a_m);
      const auto d = lpm::decorated_permutation(m);
      const bool free = lpm::is_loop_and_coloop_free(m);
      std::optional<bool> union_ok;
      if (!a_sub.empty()) union_ok = lpm::interval_union_condition(lpm::parse_lpm(a_sub), m);
      if (json) {
        lpm::Json out{{"matroid", lpm::lpm_json(m)}, {"decorated_permutation", lpm::decorated_permutation_json(d)}};
        if (free) {
          lpm::Json rows = lpm::Json::array(), cols = lpm::Json::array();
          for (const auto& r : lpm::row_intervals(m)) rows.push_back(lpm::interval_json(r));
          for (const auto& c : lpm::column_intervals(m)) cols.push_back(lpm::interval_json(c));
          out["row_intervals"] = rows;
          out["column_intervals"] = cols;
        }
        if (union_ok) out["interval_union"] = *union_ok;
        print_json(out);
      } else {
        std::cout << "decorated permutation " << d.to_string() << '\n';
        if (free) {
          std::cout << "rows";
          for (const auto& r : lpm::row_intervals(m)) std::cout << ' ' << r.to_string();
          std::cout << "\ncolumns";
          for (const auto& c : lpm::column_intervals(m)) std::cout << ' ' << c.to_string();
          std::cout << '\n';
        } else {
          std::cout << "intervals need a loop- and coloop-free LPM\n";
        }
        if (union_ok) std::cout << "interval union " << (*union_ok ? "true" : "false") << '\n';
      }
      return union_ok && !*union_ok ? kNegative : kOk;
    }

    if (*dyck) {
      if (!d_path.empty()) {
        if (d_n < 0) throw lpm::ArgumentError("--path needs --n");
        const auto m = lpm::dyck_to_lpm(lpm::DyckPath(d_path), d_n);
        if (json) print_json({{"path", d_path}, {"matroid", lpm::lpm_json(m)}});
        else std::cout << m.to_string() << '\n';
        return kOk;
      }
      if (d_m.empty()) throw lpm::ArgumentError("give an LPM or --path");
      const auto m = lpm::parse_lpm(d_m);
      const auto d = lpm::lpm_to_dyck(m);
      if (json) {
        lpm::Json valleys = lpm::Json::array();
        for (const auto& [x, y] : d.valleys()) valleys.push_back({x, y});
        print_json({{"matroid", lpm::lpm_json(m)}, {"path", d.steps()}, {"peaks", d.peaks()}, {"valleys", valleys}});
      } else {
        std::cout << d.steps() << "\npeaks " << d.peaks() << "\nvalleys";
        for (const auto& [x, y] : d.valleys()) std::cout << " (" << x << "," << y << ")";
        std::cout << '\n';
      }
      return kOk;
    }

    if (*diagram) {
      auto chain = parse_all(g_chain);
      if (chain.size() == 1) {
        const auto& m = chain.front();
        std::optional<lpm::GroundSubset> overlay;
        if (!g_basis.empty()) overlay = lpm::parse_subset(g_basis, m.n());
        if (json) {
          print_json({{"matroid", lpm::lpm_json(m)}, {"points", lpm::points_json(lpm::diagram_points(m))},
                      {"ascii", lpm::render_ascii(m, overlay)}});
        } else if (g_format == "svg") {
          std::cout << lpm::render_svg(m, overlay);
        } else {
          std::cout << lpm::render_ascii(m, overlay);
        }
        return kOk;
      }
      if (!g_basis.empty()) throw lpm::ArgumentError("--basis applies to a single LPM");
      const lpm::PartialLpfm f(pad_chain(std::move(chain)));
      const auto d = lpm::flag_diagram(f);
      if (json) print_json(lpm::flag_diagram_json(d));
      else if (g_format == "svg") std::cout << lpm::render_flag_diagram_svg(d, f.to_string());
      else if (d.dimension == 2) std::cout << lpm::render_flag_diagram_ascii(d);
      else
        for (const auto& p : d.points) std::cout << p.to_string() << '\n';
      return kOk;
    }

    if (*verify) {
      bool ok = true;
      lpm::Json reports = lpm::Json::array();
      for (const auto& r : lpm::run_all_suites(v_max)) {
        ok = ok && r.ok();
        if (json) {
          reports.push_back({{"suite", r.name}, {"max_n", r.max_n}, {"cases", r.cases}, {"mismatches", r.mismatches},
                             {"skipped", r.skipped}, {"examples", r.examples}});
        } else {
          std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " n<=" << r.max_n << " cases=" << r.cases
                    << " mismatches=" << r.mismatches;
          if (r.skipped) std::cout << " skipped=" << r.skipped;
          std::cout << '\n';
          for (const auto& e : r.examples) std::cout << "  " << e << '\n';
        }
      }
      if (json) print_json({{"ok", ok}, {"suites", reports}});
      return ok ? kOk : kBreach;
    }
  } catch (const lpm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
