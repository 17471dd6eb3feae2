#pragma once

// Deterministic text and CSV renderings, and the parallel unitarity scan.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "suprep/ktype.hpp"
#include "suprep/unitarity.hpp"
#include "suprep/verma.hpp"

namespace suprep {

/// Worker count: SUPREP_THREADS if set to a positive integer, otherwise the
/// hardware concurrency.
inline unsigned thread_limit() {
  if (const char* env = std::getenv("SUPREP_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs job(k, worker) for k in [0, n) on up to `threads` workers. Results
/// must be written to slot k by the job, so output order never depends on
/// scheduling.
template <typename Job>
void parallel_for(std::size_t n, unsigned threads, Job job) {
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t k = 0; k < n; ++k) job(k, 0u);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t k = next++; k < n; k = next++) job(k, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Grid points k*step inside [from, to].
inline std::vector<mpq_class> scan_grid(const mpq_class& from, const mpq_class& to, const mpq_class& step) {
  if (sgn(step) <= 0) throw DomainError("scan step must be positive");
  std::vector<mpq_class> out;
  if (from > to) return out;
  mpq_class lo = from / step, hi = to / step;
  mpz_class k = lo.get_num() / lo.get_den();  // truncates toward zero
  if (mpq_class(k) < lo) ++k;
  mpz_class end = hi.get_num() / hi.get_den();
  if (mpq_class(end) > hi) --end;
  for (; k <= end; ++k) out.emplace_back(mpq_class(k) * step);
  return out;
}

struct ScanRow {
  mpq_class t;
  /// UnitaryToDepth(D), QuotientUnitaryToDepth(D), NotUnitary or reducible.
  std::string verdict;
  /// Failing level for NotUnitary, first kernel level for reducible.
  std::optional<unsigned> level;
  unsigned depth = 0;
  /// Closed-form verdict for the built-in rank-one algebras, else empty.
  std::string closed_form;
  UnitarityCertificate certificate;
};

inline std::string closed_form_label(const SuperAlgebra& a, const mpq_class& t) {
  if (!has_closed_form(a)) return "";
  auto v = closed_form_verdict(a, t);
  if (v.unitary) return "unitary";
  return v.reducible ? "reducible" : "not-unitary";
}

/// Certificate for each point of a rank-one scan. A point whose Gram levels
/// have a radical within the depth is reported as reducible.
inline std::vector<ScanRow> unitary_scan(const AlgebraPtr& a, const std::vector<mpq_class>& points,
                                         unsigned depth, unsigned threads = thread_limit()) {
  if (a->rank() != 1) throw DomainError("unitary-scan needs a rank-one algebra, " + a->name() + " has rank " +
                                        std::to_string(a->rank()));
  std::vector<ScanRow> rows(points.size());
  // One enveloping algebra (and memo table) per worker.
  std::vector<EnvelopingPtr> envs(std::max(1u, threads));
  parallel_for(points.size(), threads, [&](std::size_t k, unsigned worker) {
    if (!envs[worker]) envs[worker] = Enveloping::create(a);
    Weight w;
    w.coords = {Scalar(points[k])};
    ScanRow& row = rows[k];
    row.t = points[k];
    row.depth = depth;
    row.certificate = unitarity_certificate(envs[worker], w, depth, true);
    const auto& c = row.certificate;
    if (c.first_kernel_level) {
      row.verdict = "reducible";
      row.level = c.first_kernel_level;
    } else {
      row.verdict = c.label();
      row.level = c.failing_level;
    }
    row.closed_form = closed_form_label(*a, points[k]);
  });
  return rows;
}

inline std::string rational_str(const mpq_class& q) { return q.get_str(); }

inline void write_scan_csv(std::ostream& out, const SuperAlgebra& a, const std::vector<ScanRow>& rows) {
  out << "# suprep-unitary-scan v1\n";
  out << a.weight_names().at(0) << ",verdict,level,depth,closed_form\n";
  for (const auto& r : rows) {
    out << rational_str(r.t) << "," << r.verdict << "," << (r.level ? std::to_string(*r.level) : "") << ","
        << r.depth << "," << r.closed_form << "\n";
  }
}

inline std::string render_weight(const SuperAlgebra& a, const Weight& w) {
  std::string s;
  for (std::size_t k = 0; k < w.coords.size(); ++k)
    s += (k ? "," : "") + a.weight_names()[k] + "=" + w.coords[k].str();
  return s;
}

inline std::string render_coords(const ScalarVector& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].str();
  return s + ")";
}

inline std::string render_basis_vector(const Enveloping& env, const Monomial& m) {
  std::string mono = env.render_monomial(m);
  return mono.empty() ? "v" : mono + "*v";
}

inline void write_gram_csv(std::ostream& out, const VermaModule& v, const std::vector<GramLevel>& levels) {
  const auto& names = v.algebra().weight_names();
  if (v.is_symbolic()) {
    out << "# suprep-gram-symbolic v1\n";
    out << "depth,row,col,value\n";
  } else {
    out << "# suprep-gram v1\n";
    out << "depth,row,col,re,im,verdict\n";
  }
  for (const auto& g : levels)
    for (std::size_t i = 0; i < g.matrix.size(); ++i)
      for (std::size_t j = 0; j < g.matrix.size(); ++j) {
        out << g.depth << "," << i << "," << j << ",";
        if (v.is_symbolic()) {
          out << g.matrix[i][j].str(names) << "\n";
        } else {
          Scalar s = g.matrix[i][j].constant();
          out << rational_str(s.re()) << "," << rational_str(s.im()) << "," << to_string(g.verdict->verdict)
              << "\n";
        }
      }
}

inline void write_gram_table(std::ostream& out, const VermaModule& v, const std::vector<GramLevel>& levels) {
  const auto& names = v.algebra().weight_names();
  for (const auto& g : levels) {
    out << "level " << g.depth << ":";
    for (const auto& m : g.basis) out << " " << render_basis_vector(*v.env(), m);
    out << "\n";
    std::vector<std::vector<std::string>> cells;
    std::size_t width = 0;
    for (const auto& row : g.matrix) {
      cells.emplace_back();
      for (const auto& e : row) {
        cells.back().push_back(v.is_symbolic() ? e.str(names) : e.constant().str());
        width = std::max(width, cells.back().back().size());
      }
    }
    for (const auto& row : cells) {
      out << " ";
      for (const auto& c : row) out << " " << std::string(width - c.size(), ' ') << c;
      out << "\n";
    }
    if (g.verdict) {
      out << "  verdict: " << to_string(g.verdict->verdict) << "\n";
      if (g.verdict->negative_witness)
        out << "  witness: " << v.render(level_vector(v, g.depth, *g.verdict->negative_witness))
            << " with norm " << g.verdict->witness_value.str() << "\n";
      for (const auto& k : g.verdict->kernel) out << "  kernel: " << v.render(level_vector(v, g.depth, k)) << "\n";
    }
  }
}

inline void write_certificate(std::ostream& out, const VermaModule& v, const UnitarityCertificate& c) {
  out << "verdict: " << c.label() << "\n";
  if (c.failing_level) {
    out << "failing level: " << *c.failing_level << "\n";
    out << "witness: " << v.render(c.witness_vector) << "\n";
    out << "witness coordinates: " << render_coords(c.witness) << "\n";
    out << "witness norm: " << c.witness_value.str() << "\n";
  }
  for (const auto& s : c.radical) out << "radical at level " << s.level << ": " << v.render(s.vector) << "\n";
}

inline void write_singular_report(std::ostream& out, const VermaModule& v, const std::vector<SingularVector>& s,
                                  unsigned depth) {
  if (s.empty()) {
    out << "no singular vectors to depth " << depth << "\n";
    return;
  }
  for (const auto& sv : s)
    out << "level " << sv.level << ": " << v.render(sv.vector) << (sv.primitive ? " (primitive)" : "") << "\n";
}

inline void write_ktype_report(std::ostream& out, const KTypeBound& b) {
  out << "dim R: " << b.dim_r << "\n";
  out << "R weights:";
  for (const auto& w : b.r_weights) out << " [" << render_ktype(w) << "]";
  out << "\nQ:";
  for (const auto& q : b.q_set) out << " [" << render_ktype(q) << "]";
  out << "\nmultiplicity sum: " << b.multiplicity_sum << "\n";
  out << "bound: " << b.bound << "\n";
}

}  // namespace suprep
