#include "netmet/netmet.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "netmet/correspondence.hpp"
#include "netmet/distance.hpp"
#include "netmet/error.hpp"
#include "netmet/generators.hpp"
#include "netmet/geodesics.hpp"
#include "netmet/io.hpp"
#include "netmet/isomorphism.hpp"
#include "netmet/motifs.hpp"
#include "netmet/network.hpp"

struct netmet_network {
  netmet::Network net;
};

struct netmet_correspondence {
  netmet::Correspondence r;
};

namespace {

thread_local std::string g_last_error;

netmet_status fail(netmet_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
netmet_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return NETMET_OK;
  } catch (const netmet::ParseError& e) {
    return fail(NETMET_ERR_PARSE, e.what());
  } catch (const netmet::BudgetExceeded& e) {
    return fail(NETMET_ERR_BUDGET, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(NETMET_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(NETMET_ERR_INTERNAL, "out of memory");
  } catch (const std::runtime_error& e) {
    return fail(NETMET_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(NETMET_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NETMET_ERR_INTERNAL, "unknown error");
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

netmet_network* wrap(netmet::Network n) { return new netmet_network{std::move(n)}; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

size_t* dup_indices(const std::vector<std::size_t>& v) {
  size_t* out = static_cast<size_t*>(std::malloc(std::max<std::size_t>(v.size(), 1) * sizeof(size_t)));
  if (!out) throw std::bad_alloc();
  std::copy(v.begin(), v.end(), out);
  return out;
}

}  // namespace

extern "C" {

const char* netmet_last_error(void) { return g_last_error.c_str(); }

const char* netmet_status_name(netmet_status status) {
  switch (status) {
    case NETMET_OK: return "ok";
    case NETMET_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case NETMET_ERR_PARSE: return "parse-error";
    case NETMET_ERR_BUDGET: return "budget-exceeded";
    case NETMET_ERR_IO: return "io-error";
    case NETMET_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

void netmet_string_free(char* s) { std::free(s); }
void netmet_indices_free(size_t* indices) { std::free(indices); }

netmet_status netmet_network_create(size_t n, const char* const* labels, const double* weights,
                                    netmet_network** out) {
  return guarded([&] {
    require(out && weights, "null argument");
    netmet::Matrix w(n, std::vector<double>(weights, weights + n * n));
    if (labels) {
      std::vector<std::string> ls;
      for (size_t i = 0; i < n; ++i) {
        require(labels[i] != nullptr, "null label");
        ls.emplace_back(labels[i]);
      }
      *out = wrap(netmet::Network(std::move(ls), std::move(w)));
    } else {
      *out = wrap(netmet::Network(std::move(w)));
    }
  });
}

netmet_status netmet_network_parse(const char* text, netmet_network** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = wrap(netmet::parse_network(text));
  });
}

netmet_status netmet_network_read(const char* path, netmet_network** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = wrap(netmet::read_network_file(path));
  });
}

netmet_status netmet_network_write(const netmet_network* x, const char* path) {
  return guarded([&] {
    require(x && path, "null argument");
    netmet::write_network_file(x->net, path);
  });
}

netmet_status netmet_network_serialize(const netmet_network* x, char** out_text) {
  return guarded([&] {
    require(x && out_text, "null argument");
    *out_text = dup_string(netmet::serialize_network(x->net));
  });
}

void netmet_network_free(netmet_network* x) { delete x; }

size_t netmet_network_size(const netmet_network* x) { return x ? x->net.size() : 0; }

const char* netmet_network_label(const netmet_network* x, size_t i) {
  if (!x || i >= x->net.size()) return nullptr;
  return x->net.label(i).c_str();
}

netmet_status netmet_network_weight(const netmet_network* x, size_t i, size_t j, double* out) {
  return guarded([&] {
    require(x && out, "null argument");
    require(i < x->net.size() && j < x->net.size(), "node index out of range");
    *out = x->net.weight(i, j);
  });
}

double netmet_diameter(const netmet_network* x) { return x ? netmet::diameter(x->net) : 0.0; }

int netmet_is_generic(const netmet_network* x) { return x && netmet::is_generic(x->net) ? 1 : 0; }

netmet_status netmet_blow_up(const netmet_network* x, const size_t* multiplicities, size_t count,
                             netmet_network** out) {
  return guarded([&] {
    require(x && multiplicities && out, "null argument");
    std::vector<std::size_t> k(multiplicities, multiplicities + count);
    *out = wrap(netmet::blow_up(x->net, k));
  });
}

netmet_status netmet_skeletonize(const netmet_network* x, double tolerance, netmet_network** out_skeleton,
                                 size_t* class_of) {
  return guarded([&] {
    require(x && out_skeleton, "null argument");
    auto sk = netmet::skeletonize(x->net, tolerance);
    if (class_of) std::copy(sk.class_of.begin(), sk.class_of.end(), class_of);
    *out_skeleton = wrap(std::move(sk.skeleton));
  });
}

netmet_status netmet_canonical_pseudometric(const netmet_network* x, const size_t* subset, size_t subset_len,
                                            double* out) {
  return guarded([&] {
    require(x && subset && out, "null argument");
    std::vector<netmet::NodeIndex> a(subset, subset + subset_len);
    const auto g = netmet::canonical_pseudometric(x->net, a);
    std::copy(g.data().begin(), g.data().end(), out);
  });
}

netmet_status netmet_quantize(const netmet_network* x, double step, netmet_network** out) {
  return guarded([&] {
    require(x && out, "null argument");
    *out = wrap(netmet::quantize(x->net, step));
  });
}

netmet_status netmet_extract_net(const netmet_network* x, double epsilon, netmet_network** out, double* bound) {
  return guarded([&] {
    require(x && out && bound, "null argument");
    auto e = netmet::extract_net(x->net, epsilon);
    *bound = e.bound;
    *out = wrap(std::move(e.subnetwork));
  });
}

netmet_status netmet_correspondence_create(size_t n_x, size_t n_y, const size_t* pairs, size_t count,
                                           netmet_correspondence** out) {
  return guarded([&] {
    require(out && (pairs || count == 0), "null argument");
    std::vector<netmet::NodePair> ps;
    for (size_t k = 0; k < count; ++k) ps.emplace_back(pairs[2 * k], pairs[2 * k + 1]);
    *out = new netmet_correspondence{netmet::Correspondence(n_x, n_y, std::move(ps))};
  });
}

void netmet_correspondence_free(netmet_correspondence* r) { delete r; }

size_t netmet_correspondence_size(const netmet_correspondence* r) { return r ? r->r.size() : 0; }

netmet_status netmet_correspondence_pair(const netmet_correspondence* r, size_t k, size_t* i, size_t* j) {
  return guarded([&] {
    require(r && i && j, "null argument");
    require(k < r->r.size(), "pair index out of range");
    *i = r->r.pairs()[k].first;
    *j = r->r.pairs()[k].second;
  });
}

int netmet_correspondence_validate(const netmet_correspondence* r, const netmet_network* x,
                                   const netmet_network* y) {
  return r && x && y && netmet::validate(r->r, x->net, y->net) ? 1 : 0;
}

netmet_status netmet_distortion(const netmet_correspondence* r, const netmet_network* x, const netmet_network* y,
                                double* out) {
  return guarded([&] {
    require(r && x && y && out, "null argument");
    *out = netmet::distortion(r->r, x->net, y->net);
  });
}

netmet_status netmet_compose(const netmet_correspondence* r, const netmet_correspondence* s,
                             netmet_correspondence** out) {
  return guarded([&] {
    require(r && s && out, "null argument");
    *out = new netmet_correspondence{netmet::compose(r->r, s->r)};
  });
}

netmet_status netmet_exact_distance(const netmet_network* x, const netmet_network* y, size_t node_budget,
                                    unsigned threads, double* value, netmet_correspondence** optimal) {
  return guarded([&] {
    require(x && y && value, "null argument");
    auto res = netmet::exact_distance(x->net, y->net, {node_budget, threads});
    *value = res.value;
    if (optimal) *optimal = new netmet_correspondence{std::move(res.witness)};
  });
}

netmet_status netmet_lower_bound_diameter(const netmet_network* x, const netmet_network* y, double* out) {
  return guarded([&] {
    require(x && y && out, "null argument");
    *out = netmet::lower_bound_diameter(x->net, y->net);
  });
}

netmet_status netmet_lower_bound_motif(const netmet_network* x, const netmet_network* y, size_t n,
                                       size_t tuple_budget, double* out) {
  return guarded([&] {
    require(x && y && out, "null argument");
    *out = netmet::lower_bound_motif(x->net, y->net, n, tuple_budget);
  });
}

netmet_status netmet_upper_bound_product(const netmet_network* x, const netmet_network* y, double* out) {
  return guarded([&] {
    require(x && y && out, "null argument");
    *out = netmet::upper_bound_product(x->net, y->net).value;
  });
}

void netmet_report_options_init(netmet_report_options* options) {
  if (!options) return;
  const netmet::ReportOptions d;
  options->exact_budget = d.exact_budget;
  options->motif_max_order = d.motif_max_order;
  options->motif_budget = d.motif_budget;
  options->threads = d.threads;
}

netmet_status netmet_distance_report(const netmet_network* x, const netmet_network* y,
                                     const netmet_report_options* options, char** out_text) {
  return guarded([&] {
    require(x && y && out_text, "null argument");
    netmet::ReportOptions o;
    if (options) {
      o.exact_budget = options->exact_budget;
      o.motif_max_order = options->motif_max_order;
      o.motif_budget = options->motif_budget;
      o.threads = options->threads;
    }
    const auto report = netmet::distance_report(x->net, y->net, o);
    *out_text = dup_string(netmet::format_report(report, x->net, y->net));
  });
}

netmet_status netmet_motif_set_text(const netmet_network* x, size_t n, size_t tuple_budget, char** out_text) {
  return guarded([&] {
    require(x && out_text, "null argument");
    *out_text = dup_string(netmet::format_motif_set(netmet::motif_set(x->net, n, tuple_budget)));
  });
}

netmet_status netmet_motif_distance(const netmet_network* x, const netmet_network* y, size_t n,
                                    size_t tuple_budget, double* out) {
  return guarded([&] {
    require(x && y && out, "null argument");
    *out = netmet::hausdorff_linf(netmet::motif_set(x->net, n, tuple_budget),
                                  netmet::motif_set(y->net, n, tuple_budget));
  });
}

netmet_status netmet_reconstruct_generic(const netmet_network* x, const netmet_network* y, int* found,
                                         size_t* forward) {
  return guarded([&] {
    require(x && y && found && forward, "null argument");
    const auto b = netmet::reconstruct_generic(x->net, y->net);
    *found = b ? 1 : 0;
    if (b) std::copy(b->begin(), b->end(), forward);
  });
}

netmet_status netmet_strong_isomorphic(const netmet_network* x, const netmet_network* y, double epsilon,
                                       int* isomorphic, size_t* forward) {
  return guarded([&] {
    require(x && y && isomorphic, "null argument");
    const auto b = netmet::strong_isomorphic(x->net, y->net, epsilon);
    *isomorphic = b ? 1 : 0;
    if (b && forward) std::copy(b->begin(), b->end(), forward);
  });
}

netmet_status netmet_weak_isomorphic(const netmet_network* x, const netmet_network* y, double epsilon,
                                     int* isomorphic, netmet_network** skeleton_x, netmet_network** skeleton_y,
                                     size_t** skeleton_map) {
  return guarded([&] {
    require(x && y && isomorphic, "null argument");
    auto w = netmet::weak_isomorphic(x->net, y->net, epsilon);
    size_t* map = w.skeleton_map && skeleton_map ? dup_indices(*w.skeleton_map) : nullptr;
    *isomorphic = w.isomorphic ? 1 : 0;
    if (skeleton_map) *skeleton_map = map;
    if (skeleton_x) *skeleton_x = wrap(std::move(w.skeleton_x.skeleton));
    if (skeleton_y) *skeleton_y = wrap(std::move(w.skeleton_y.skeleton));
  });
}

netmet_status netmet_automorphisms(const netmet_network* x, size_t size_budget, size_t** maps, size_t* count) {
  return guarded([&] {
    require(x && maps && count, "null argument");
    const auto all = netmet::enumerate_automorphisms(x->net, size_budget);
    std::vector<std::size_t> flat;
    for (const auto& b : all) flat.insert(flat.end(), b.begin(), b.end());
    *maps = dup_indices(flat);
    *count = all.size();
  });
}

netmet_status netmet_geodesic_point(const netmet_network* x, const netmet_network* y,
                                    const netmet_correspondence* r, double t, netmet_network** out) {
  return guarded([&] {
    require(x && y && r && out, "null argument");
    *out = wrap(netmet::geodesic_point(x->net, y->net, r->r, t).network);
  });
}

netmet_status netmet_sample_geodesic(const netmet_network* x, const netmet_network* y, const double* ts,
                                     size_t count, size_t node_budget, unsigned threads, netmet_network** out) {
  return guarded([&] {
    require(x && y && out && (ts || count == 0), "null argument");
    auto points = netmet::sample_geodesic(x->net, y->net, std::span(ts, count), {node_budget, threads});
    for (size_t k = 0; k < count; ++k) out[k] = wrap(std::move(points[k].network));
  });
}

netmet_status netmet_midpoint(const netmet_network* x, const netmet_network* y, size_t node_budget,
                              unsigned threads, netmet_network** out) {
  return guarded([&] {
    require(x && y && out, "null argument");
    *out = wrap(netmet::midpoint(x->net, y->net, {node_budget, threads}));
  });
}

netmet_status netmet_directed_circle(size_t n, netmet_network** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = wrap(netmet::directed_circle(n));
  });
}

netmet_status netmet_directed_circle_reversible(size_t n, double rho, netmet_network** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = wrap(netmet::directed_circle_reversible(n, rho));
  });
}

netmet_status netmet_constant_network(size_t n, double alpha, netmet_network** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = wrap(netmet::constant_network(n, alpha));
  });
}

netmet_status netmet_random_network(size_t n, double low, double high, uint64_t seed, netmet_network** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = wrap(netmet::random_network(n, low, high, seed));
  });
}

}  // extern "C"
