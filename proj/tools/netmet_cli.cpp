// netmet: command-line front end over the libnetmet C interface.
//
// Exit codes: 0 success (for `iso`: isomorphic), 1 `iso` not isomorphic,
// 2 any error. Errors print a single line "error: <kind>: <message>" on stderr.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "netmet/netmet.h"

namespace {

constexpr int kExitError = 2;

struct Failure {
  std::string kind;
  std::string message;
};

struct NetworkDeleter {
  void operator()(netmet_network* x) const { netmet_network_free(x); }
};
using NetworkPtr = std::unique_ptr<netmet_network, NetworkDeleter>;

struct StringDeleter {
  void operator()(char* s) const { netmet_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct IndicesDeleter {
  void operator()(size_t* p) const { netmet_indices_free(p); }
};
using Indices = std::unique_ptr<size_t, IndicesDeleter>;

void check(netmet_status s) {
  if (s != NETMET_OK) throw Failure{netmet_status_name(s), netmet_last_error()};
}

NetworkPtr load(const std::string& path) {
  netmet_network* x = nullptr;
  check(netmet_network_read(path.c_str(), &x));
  return NetworkPtr(x);
}

std::string serialize(const netmet_network* x) {
  char* text = nullptr;
  check(netmet_network_serialize(x, &text));
  return CString(text).get();
}

void emit(const netmet_network* x, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << serialize(x);
  } else {
    check(netmet_network_write(x, out_path.c_str()));
  }
}

unsigned threads_from_env() {
  const char* v = std::getenv("NETMET_THREADS");
  if (!v || !*v) return 0;
  char* end = nullptr;
  const unsigned long n = std::strtoul(v, &end, 10);
  if (*end != '\0') throw Failure{"invalid-argument", std::string("NETMET_THREADS is not an integer: ") + v};
  return static_cast<unsigned>(n);
}

unsigned resolved_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::string report_for(const netmet_network* x, const netmet_network* y, const netmet_report_options& o) {
  char* text = nullptr;
  check(netmet_distance_report(x, y, &o, &text));
  return CString(text).get();
}

// Reports for every unordered pair of *.net files in dir, in sorted order.
void dist_all(const std::string& dir, netmet_report_options o) {
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".net") files.push_back(entry.path().string());
  if (ec) throw Failure{"io-error", "cannot list '" + dir + "': " + ec.message()};
  std::sort(files.begin(), files.end());

  std::vector<NetworkPtr> nets;
  for (const auto& f : files) nets.push_back(load(f));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < nets.size(); ++i)
    for (std::size_t j = i + 1; j < nets.size(); ++j) pairs.emplace_back(i, j);

  const unsigned workers = std::min<std::size_t>(resolved_threads(o.threads), std::max<std::size_t>(pairs.size(), 1));
  o.threads = 1;
  std::vector<std::string> out(pairs.size());
  std::vector<Failure> errors(pairs.size());
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next.fetch_add(1); k < pairs.size(); k = next.fetch_add(1)) {
          try {
            out[k] = report_for(nets[pairs[k].first].get(), nets[pairs[k].second].get(), o);
          } catch (const Failure& f) {
            errors[k] = f;
          }
        }
      });
    }
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!errors[k].kind.empty()) throw errors[k];
    std::cout << "pair = " << files[pairs[k].first] << " " << files[pairs[k].second] << "\n" << out[k];
  }
}

std::vector<double> parse_ts(const std::vector<std::string>& raw) {
  std::vector<double> ts;
  for (const auto& s : raw) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw Failure{"invalid-argument", "bad parameter '" + s + "'"};
    ts.push_back(v);
  }
  return ts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"netmet: distances, motifs, skeleta and geodesics of finite weighted networks"};
  app.require_subcommand(1);

  // dist
  auto* dist = app.add_subcommand("dist", "Distance report between two networks");
  std::vector<std::string> dist_files;
  std::string dist_dir;
  netmet_report_options ropts;
  netmet_report_options_init(&ropts);
  dist->add_option("files", dist_files, "Two network files")->expected(0, 2);
  dist->add_option("--exact-budget", ropts.exact_budget, "Largest node count for the exact solver");
  dist->add_option("--motif-n", ropts.motif_max_order, "Highest motif order used as a lower bound");
  dist->add_option("--motif-budget", ropts.motif_budget, "Tuple budget per motif set");
  dist->add_option("--all", dist_dir, "Report every pair of *.net files in a directory");

  // skeleton
  auto* skel = app.add_subcommand("skeleton", "Skeleton (quotient by identical rows and columns)");
  std::string skel_in, skel_out;
  double skel_tol = 0.0;
  skel->add_option("file", skel_in)->required();
  skel->add_option("-o,--output", skel_out);
  skel->add_option("--tol", skel_tol, "Merge nodes whose weight profiles differ by at most this much");

  // blowup
  auto* blow = app.add_subcommand("blowup", "Blow-up network");
  std::string blow_in, blow_out;
  std::vector<std::size_t> blow_mult;
  blow->add_option("file", blow_in)->required();
  blow->add_option("--mult", blow_mult, "Copies per node, comma separated")->required()->delimiter(',');
  blow->add_option("-o,--output", blow_out);

  // motifs
  auto* mot = app.add_subcommand("motifs", "n-motif set");
  std::string mot_in;
  std::size_t mot_n = 1, mot_budget = 1'000'000;
  mot->add_option("file", mot_in)->required();
  mot->add_option("-n", mot_n, "Motif order")->required();
  mot->add_option("--budget", mot_budget, "Tuple budget");

  // geodesic
  auto* geo = app.add_subcommand("geodesic", "Sample a geodesic between two networks");
  std::vector<std::string> geo_files, geo_ts_raw;
  std::string geo_prefix;
  std::size_t geo_budget = 7;
  geo->add_option("files", geo_files)->required()->expected(2);
  geo->add_option("--ts", geo_ts_raw, "Parameters in [0,1], comma separated")->required()->delimiter(',');
  geo->add_option("--exact-budget", geo_budget);
  geo->add_option("-o,--output-prefix", geo_prefix, "Write PREFIX_<k>.net instead of stdout");

  // iso
  auto* iso = app.add_subcommand("iso", "Isomorphism test (exit 0 = isomorphic, 1 = not)");
  std::vector<std::string> iso_files;
  double iso_eps = 0.0;
  bool iso_weak = false, iso_strong = false;
  iso->add_option("files", iso_files)->required()->expected(2);
  auto* weak_flag = iso->add_flag("--weak", iso_weak, "Weak isomorphism (default)");
  iso->add_flag("--strong", iso_strong, "Strong isomorphism")->excludes(weak_flag);
  iso->add_option("--eps", iso_eps, "Weight comparison tolerance (heuristic)");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate example networks");
  gen->require_subcommand(1);
  std::string gen_out;
  gen->add_option("-o,--output", gen_out);
  std::size_t gen_n = 1;
  double gen_rho = 1.0, gen_value = 0.0, gen_low = 0.0, gen_high = 1.0;
  std::uint64_t gen_seed = 0;
  auto* g_circle = gen->add_subcommand("circle", "Directed circle");
  g_circle->add_option("n", gen_n)->required();
  auto* g_rho = gen->add_subcommand("circle-rho", "Directed circle with reversibility rho");
  g_rho->add_option("n", gen_n)->required();
  g_rho->add_option("--rho", gen_rho)->required();
  auto* g_const = gen->add_subcommand("constant", "Constant network");
  g_const->add_option("n", gen_n)->required();
  g_const->add_option("--value", gen_value)->required();
  auto* g_rand = gen->add_subcommand("random", "Uniform random weights");
  g_rand->add_option("n", gen_n)->required();
  g_rand->add_option("--low", gen_low);
  g_rand->add_option("--high", gen_high);
  g_rand->add_option("--seed", gen_seed);
  for (auto* sub : {g_circle, g_rho, g_const, g_rand}) sub->add_option("-o,--output", gen_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (*dist) {
      ropts.threads = threads_from_env();
      if (!dist_dir.empty()) {
        if (!dist_files.empty()) throw Failure{"usage", "--all takes no positional files"};
        dist_all(dist_dir, ropts);
      } else {
        if (dist_files.size() != 2) throw Failure{"usage", "dist needs two network files (or --all DIR)"};
        auto x = load(dist_files[0]);
        auto y = load(dist_files[1]);
        std::cout << report_for(x.get(), y.get(), ropts);
      }
    } else if (*skel) {
      auto x = load(skel_in);
      std::vector<size_t> class_of(netmet_network_size(x.get()));
      netmet_network* sk = nullptr;
      check(netmet_skeletonize(x.get(), skel_tol, &sk, class_of.data()));
      NetworkPtr skeleton(sk);
      std::string classes;
      for (std::size_t i = 0; i < class_of.size(); ++i)
        classes += std::string("# class ") + netmet_network_label(x.get(), i) + " -> " +
                   netmet_network_label(skeleton.get(), class_of[i]) + "\n";
      if (skel_out.empty()) {
        std::cout << classes << serialize(skeleton.get());
      } else {
        emit(skeleton.get(), skel_out);
        std::cout << classes;
      }
    } else if (*blow) {
      auto x = load(blow_in);
      netmet_network* b = nullptr;
      check(netmet_blow_up(x.get(), blow_mult.data(), blow_mult.size(), &b));
      emit(NetworkPtr(b).get(), blow_out);
    } else if (*mot) {
      auto x = load(mot_in);
      char* text = nullptr;
      check(netmet_motif_set_text(x.get(), mot_n, mot_budget, &text));
      std::cout << CString(text).get();
    } else if (*geo) {
      auto x = load(geo_files[0]);
      auto y = load(geo_files[1]);
      const auto ts = parse_ts(geo_ts_raw);
      std::vector<netmet_network*> raw(ts.size(), nullptr);
      check(netmet_sample_geodesic(x.get(), y.get(), ts.data(), ts.size(), geo_budget, threads_from_env(),
                                   raw.data()));
      std::vector<NetworkPtr> points;
      for (auto* p : raw) points.emplace_back(p);
      for (std::size_t k = 0; k < points.size(); ++k) {
        if (geo_prefix.empty()) {
          std::cout << "# t = " << geo_ts_raw[k] << "\n" << serialize(points[k].get());
        } else {
          const std::string path = geo_prefix + "_" + std::to_string(k) + ".net";
          check(netmet_network_write(points[k].get(), path.c_str()));
          std::cout << "t = " << geo_ts_raw[k] << " -> " << path << "\n";
        }
      }
    } else if (*iso) {
      auto x = load(iso_files[0]);
      auto y = load(iso_files[1]);
      int result = 0;
      if (iso_strong) {
        std::vector<size_t> forward(netmet_network_size(x.get()));
        check(netmet_strong_isomorphic(x.get(), y.get(), iso_eps, &result, forward.data()));
        std::cout << "strong = " << (result ? "true" : "false") << "\n";
        if (result)
          for (std::size_t i = 0; i < forward.size(); ++i)
            std::cout << netmet_network_label(x.get(), i) << " -> " << netmet_network_label(y.get(), forward[i])
                      << "\n";
      } else {
        netmet_network *skx = nullptr, *sky = nullptr;
        size_t* map = nullptr;
        check(netmet_weak_isomorphic(x.get(), y.get(), iso_eps, &result, &skx, &sky, &map));
        NetworkPtr sx(skx), sy(sky);
        Indices m(map);
        std::cout << "weak = " << (result ? "true" : "false") << "\n";
        if (result)
          for (std::size_t i = 0; i < netmet_network_size(sx.get()); ++i)
            std::cout << netmet_network_label(sx.get(), i) << " -> " << netmet_network_label(sy.get(), m.get()[i])
                      << "\n";
      }
      return result ? 0 : 1;
    } else if (*gen) {
      netmet_network* g = nullptr;
      if (*g_circle) {
        check(netmet_directed_circle(gen_n, &g));
      } else if (*g_rho) {
        check(netmet_directed_circle_reversible(gen_n, gen_rho, &g));
      } else if (*g_const) {
        check(netmet_constant_network(gen_n, gen_value, &g));
      } else {
        check(netmet_random_network(gen_n, gen_low, gen_high, gen_seed, &g));
      }
      emit(NetworkPtr(g).get(), gen_out);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.kind << ": " << f.message << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: internal-error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
