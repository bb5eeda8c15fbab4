// Copyright 2026 The qroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qroute/results_io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

namespace qroute {

std::string format_real(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

namespace {

std::string optional_real(const std::optional<double>& value) {
  return value ? format_real(*value) : std::string();
}

void write_key(std::ostream& out, const GridKey& key) {
  out << key.policy << ',' << to_string(key.topology) << ','
      << optional_real(key.xi) << ',' << optional_real(key.a) << ','
      << optional_real(key.beta) << ',' << optional_real(key.lambda) << ','
      << key.n_sd;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t                   start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

// Reads lines, dropping a trailing '\r' and skipping blank lines.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (not line.empty() and line.back() == '\r') {
        line.pop_back();
      }
      if (not line.empty()) {
        return true;
      }
    }
    return false;
  }

  std::size_t number() const noexcept { return number_; }

 private:
  std::istream& in_;
  std::size_t   number_ = 0;
};

class FieldParser {
 public:
  FieldParser(std::size_t line) : line_(line) {}

  [[noreturn]] void fail(std::string_view field, std::string_view text) const {
    throw CsvError("line " + std::to_string(line_) + ": bad " +
                   std::string(field) + " value '" + std::string(text) + "'");
  }

  double real(std::string_view field, std::string_view text) const {
    double value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} or ptr != text.data() + text.size()) {
      fail(field, text);
    }
    return value;
  }

  std::optional<double> optional_real(std::string_view field,
                                      std::string_view text) const {
    if (text.empty()) {
      return std::nullopt;
    }
    return real(field, text);
  }

  std::size_t integer(std::string_view field, std::string_view text) const {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() or ec != std::errc{} or ptr != text.data() + text.size()) {
      fail(field, text);
    }
    return value;
  }

  TopologyKind topology(std::string_view text) const {
    try {
      return parse_topology_kind(text);
    } catch (const std::invalid_argument&) {
      fail("topology", text);
    }
  }

 private:
  std::size_t line_;
};

void expect_header(LineReader& reader, std::string_view header) {
  std::string line;
  if (not reader.next(line)) {
    throw CsvError("empty input: expected header '" + std::string(header) + "'");
  }
  if (line != header) {
    throw CsvError("line " + std::to_string(reader.number()) +
                   ": unexpected header '" + line + "'");
  }
}

} // namespace

void write_raw_csv(std::ostream& out, std::span<const ResultRow> rows) {
  out << kRawHeader << '\n';
  for (const auto& r : rows) {
    write_key(out, grid_key(r));
    out << ',' << r.replica_topo << ',' << r.replica_quality << ','
        << r.order_index << ',' << r.pair_id << ','
        << (r.status == PairStatus::served ? "served" : "blocked") << ',';
    if (r.path_len) {
      out << *r.path_len;
    }
    out << ',' << optional_real(r.fidelity_true) << ','
        << optional_real(r.fidelity_est) << '\n';
  }
}

std::vector<ResultRow> read_raw_csv(std::istream& in) {
  LineReader reader(in);
  expect_header(reader, kRawHeader);

  std::vector<ResultRow> rows;
  std::string            line;
  while (reader.next(line)) {
    const auto f = split(line);
    if (f.size() != 15) {
      throw CsvError("line " + std::to_string(reader.number()) + ": expected 15 fields, got " +
                     std::to_string(f.size()));
    }
    const FieldParser p(reader.number());
    ResultRow         r;
    r.policy          = std::string(f[0]);
    r.topology        = p.topology(f[1]);
    r.xi              = p.optional_real("xi", f[2]);
    r.a               = p.optional_real("a", f[3]);
    r.beta            = p.optional_real("beta", f[4]);
    r.lambda          = p.optional_real("lambda", f[5]);
    r.n_sd            = p.integer("n_sd", f[6]);
    r.replica_topo    = p.integer("replica_topo", f[7]);
    r.replica_quality = p.integer("replica_quality", f[8]);
    r.order_index     = p.integer("order_index", f[9]);
    r.pair_id         = p.integer("pair_id", f[10]);
    if (f[11] == "served") {
      r.status = PairStatus::served;
    } else if (f[11] == "blocked") {
      r.status = PairStatus::blocked;
    } else {
      p.fail("status", f[11]);
    }
    if (not f[12].empty()) {
      r.path_len = p.integer("path_len", f[12]);
    }
    r.fidelity_true = p.optional_real("fidelity_true", f[13]);
    r.fidelity_est  = p.optional_real("fidelity_est", f[14]);
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_edges_csv(std::ostream& out, std::span<const EdgeRecord> edges) {
  out << kEdgesHeader << '\n';
  for (const auto& e : edges) {
    out << to_string(e.topology) << ',' << optional_real(e.beta) << ',' << e.n_sd
        << ',' << e.replica_topo << ',' << e.edge_count << '\n';
  }
}

std::vector<EdgeRecord> read_edges_csv(std::istream& in) {
  LineReader reader(in);
  expect_header(reader, kEdgesHeader);
  std::vector<EdgeRecord> out;
  std::string             line;
  while (reader.next(line)) {
    const auto f = split(line);
    if (f.size() != 5) {
      throw CsvError("line " + std::to_string(reader.number()) + ": expected 5 fields");
    }
    const FieldParser p(reader.number());
    out.push_back({p.topology(f[0]), p.optional_real("beta", f[1]),
                   p.integer("n_sd", f[2]), p.integer("replica_topo", f[3]),
                   p.integer("edge_count", f[4])});
  }
  return out;
}

void write_aggregated_csv(std::ostream& out, std::span<const MetricRow> rows) {
  out << kAggregatedHeader << '\n';
  for (const auto& r : rows) {
    write_key(out, r.key);
    out << ',' << r.metric << ',' << format_real(r.value) << ','
        << optional_real(r.ci_half) << '\n';
  }
}

void write_pmf_csv(std::ostream& out, std::span<const PmfRow> rows) {
  out << kPmfHeader << '\n';
  for (const auto& r : rows) {
    write_key(out, r.key);
    out << ',' << r.path_len << ',' << format_real(r.probability) << '\n';
  }
}

void write_order_csv(std::ostream& out, std::span<const OrderRow> rows) {
  out << kOrderHeader << '\n';
  for (const auto& r : rows) {
    const auto& s = r.summary;
    write_key(out, r.key);
    out << ',' << r.theta << ',' << s.count << ',' << format_real(s.mean) << ','
        << format_real(s.min) << ',' << format_real(s.q05) << ','
        << format_real(s.q25) << ',' << format_real(s.median) << ','
        << format_real(s.q75) << ',' << format_real(s.q95) << ','
        << format_real(s.max) << '\n';
  }
}

} // namespace qroute
