#include "logt/data.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>

#include "logt/errors.hpp"

namespace logt {

namespace {

[[noreturn]] void parse_fail(const std::string& path, std::int64_t line_no,
                             const std::string& what) {
  throw ParseError(path + ":" + std::to_string(line_no) + ": " + what);
}

bool parse_int(std::string_view s, long long& out) {
  if (s.empty()) return false;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (*begin == '+') ++begin;  // from_chars rejects a leading '+'
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

bool parse_real(std::string_view s, double& out) {
  if (s.empty()) return false;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end && std::isfinite(out);
}

}  // namespace

Dataset load_libsvm(const std::string& path, std::optional<int> expected_dim) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);

  struct Feature {
    int idx;
    double val;
  };
  std::vector<std::vector<Feature>> rows;
  std::vector<int> labels;
  int max_index = expected_dim.value_or(0);

  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok)) continue;  // blank line

    long long label;
    if (!parse_int(tok, label)) parse_fail(path, line_no, "bad label '" + tok + "'");
    std::vector<Feature> feats;
    while (tokens >> tok) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos) parse_fail(path, line_no, "expected idx:val, got '" + tok + "'");
      long long idx;
      double val;
      if (!parse_int(std::string_view(tok).substr(0, colon), idx) || idx < 1) {
        parse_fail(path, line_no, "bad feature index in '" + tok + "' (indices are 1-based)");
      }
      if (!parse_real(std::string_view(tok).substr(colon + 1), val)) {
        parse_fail(path, line_no, "bad feature value in '" + tok + "'");
      }
      if (expected_dim && idx > *expected_dim) {
        parse_fail(path, line_no, "feature index " + std::to_string(idx) + " exceeds expected dim " +
                                      std::to_string(*expected_dim));
      }
      max_index = std::max<int>(max_index, static_cast<int>(idx));
      feats.push_back({static_cast<int>(idx), val});
    }
    labels.push_back(static_cast<int>(label));
    rows.push_back(std::move(feats));
  }
  if (rows.empty()) throw ParseError(path + ": no data lines");
  if (max_index == 0) throw ParseError(path + ": no features and no expected_dim given");

  Dataset ds;
  ds.n = static_cast<std::int64_t>(rows.size());
  ds.d = max_index;
  ds.labels = std::move(labels);
  ds.points.assign(static_cast<std::size_t>(ds.n) * ds.d, 0.0);
  for (std::int64_t i = 0; i < ds.n; ++i) {
    for (const auto& f : rows[static_cast<std::size_t>(i)]) {
      ds.points[static_cast<std::size_t>(i) * ds.d + (f.idx - 1)] = f.val;
    }
  }
  return ds;
}

void write_libsvm(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out.precision(17);
  for (std::int64_t i = 0; i < ds.n; ++i) {
    out << ds.labels[static_cast<std::size_t>(i)];
    const auto x = ds.point(i);
    for (int f = 0; f < ds.d; ++f) {
      if (x[static_cast<std::size_t>(f)] != 0.0) out << ' ' << (f + 1) << ':' << x[static_cast<std::size_t>(f)];
    }
    out << '\n';
  }
}

void normalize_unit_range(Dataset& ds) {
  for (int f = 0; f < ds.d; ++f) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::int64_t i = 0; i < ds.n; ++i) {
      const double v = ds.points[static_cast<std::size_t>(i) * ds.d + f];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const double range = hi - lo;
    for (std::int64_t i = 0; i < ds.n; ++i) {
      double& v = ds.points[static_cast<std::size_t>(i) * ds.d + f];
      v = range > 0.0 ? (v - lo) / range : 0.0;
    }
  }
}

Dataset synth_clusters(std::int64_t n, int d, double separation, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0) throw ConfigError("synth_clusters: n must be even and >= 2");
  if (d < 1) throw ConfigError("synth_clusters: d must be >= 1");
  Rng rng(seed);

  std::vector<double> direction(static_cast<std::size_t>(d));
  double norm = 0.0;
  do {
    norm = 0.0;
    for (auto& u : direction) {
      u = rng.normal();
      norm += u * u;
    }
    norm = std::sqrt(norm);
  } while (norm == 0.0);
  for (auto& u : direction) u /= norm;

  Dataset ds;
  ds.n = n;
  ds.d = d;
  ds.points.resize(static_cast<std::size_t>(n) * d);
  ds.labels.resize(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    const int label = (i < n / 2) ? 0 : 1;
    const double sign = (label == 0) ? -1.0 : 1.0;
    ds.labels[static_cast<std::size_t>(i)] = label;
    for (int f = 0; f < d; ++f) {
      ds.points[static_cast<std::size_t>(i) * d + f] =
          sign * (separation / 2.0) * direction[static_cast<std::size_t>(f)] + rng.normal();
    }
  }
  normalize_unit_range(ds);
  return ds;
}

PairDraw draw_pair(const Dataset& ds, Rng& rng) {
  if (ds.n < 2) throw ConfigError("draw_pair: dataset needs at least two points");
  const auto n = static_cast<std::uint64_t>(ds.n);
  const auto i = static_cast<std::int64_t>(rng.below(n));
  std::int64_t j;
  do {
    j = static_cast<std::int64_t>(rng.below(n));
  } while (j == i);
  const int y = (ds.labels[static_cast<std::size_t>(i)] == ds.labels[static_cast<std::size_t>(j)])
                    ? 1
                    : -1;
  return {i, j, y};
}

}  // namespace logt
