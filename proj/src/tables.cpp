#include "constamax/tables.hpp"

#include <sstream>

#include "constamax/aqecc.hpp"
#include "constamax/convolutional.hpp"
#include "constamax/error.hpp"

namespace constamax {

namespace {

using V = std::vector<uint64_t>;

std::string conv_tuple(const V& t, uint64_t q) {
  return "(" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " + std::to_string(t[2]) + "; " +
         std::to_string(t[3]) + ", " + std::to_string(t[4]) + ")_" + std::to_string(q);
}

std::string quantum_tuple(const V& t, uint64_t q) {
  return "[[" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " + std::to_string(t[2]) + "/" +
         std::to_string(t[3]) + "]]_" + std::to_string(q);
}

void add_conv(std::vector<TableRowSpec>& out, int block, const char* fam, uint64_t q, uint64_t r,
              std::initializer_list<V> rows, const char* note = "", const char* correction = "") {
  for (const auto& t : rows) out.push_back({1, block, fam, q, r, t, note, correction});
}

void add_quantum(std::vector<TableRowSpec>& out, int table, int block, const char* fam, uint64_t q, uint64_t r,
                 std::initializer_list<V> rows, const char* note = "") {
  for (const auto& t : rows) out.push_back({table, block, fam, q, r, t, note, ""});
}

// Index the printed k corresponds to.
int64_t conv_index(ConvFamily f, uint64_t n, uint64_t k) {
  switch (f) {
    case ConvFamily::MainII:
    case ConvFamily::MainIIIA: return static_cast<int64_t>((n - k) / 2);
    default: return static_cast<int64_t>((n - k + 1) / 2);
  }
}

// (i, j) the printed dx, dz correspond to.
std::pair<int64_t, int64_t> quantum_indices(AsymFamily f, uint64_t n, uint64_t dx, uint64_t dz) {
  switch (f) {
    case AsymFamily::AsyII:
    case AsymFamily::AsyIV:
      return {static_cast<int64_t>(dz - 3) / 2, static_cast<int64_t>(n - dx - 1) / 2};
    default: return {static_cast<int64_t>(dz - 2) / 2, static_cast<int64_t>(n - dx) / 2};
  }
}

TableRow conv_row(const TableRowSpec& spec, const TableOptions& opts) {
  TableRow row;
  row.spec = spec;
  row.printed = conv_tuple(spec.printed, spec.q);
  const ConvFamily f = *parse_conv_family(spec.family);
  const auto& t = spec.printed;
  row.i = conv_index(f, t[0], t[1]);
  auto tower = conv_family_tower(f, spec.q, spec.r, opts.field);
  ConvOptions copts{opts.distance};
  const ConvCode cc = build_conv_family(f, tower, row.i, 0, 0, copts);
  const auto& d = cc.dual;
  row.regenerated = conv_display(d) + "_" + std::to_string(spec.q);
  row.detail = conv_json(cc);
  std::vector<std::string> bad;
  if (d.n != t[0] || d.k != t[1] || d.gamma != t[2] || d.memory != t[3]) bad.push_back("(n, k, gamma; m) differs");
  if (!cc.rank_conditions) bad.push_back("rank conditions fail");
  if (!cc.reduced_basic) bad.push_back("kernel degree differs from the degree of G(D)");
  if (d.df_lower != d.df_upper) bad.push_back("free distance not pinned down");
  else if (d.df_lower != t[4]) bad.push_back("free distance " + std::to_string(d.df_lower));
  if (!cc.mds) bad.push_back("not certified MDS");
  row.pass = bad.empty();
  for (const auto& b : bad) row.failure += (row.failure.empty() ? "" : "; ") + b;
  return row;
}

TableRow quantum_row(const TableRowSpec& spec, const TableOptions& opts) {
  TableRow row;
  row.spec = spec;
  row.printed = quantum_tuple(spec.printed, spec.q);
  const AsymFamily f = *parse_asym_family(spec.family);
  const auto& t = spec.printed;
  std::tie(row.i, row.j) = quantum_indices(f, t[0], t[2], t[3]);
  auto tower = asym_family_tower(f, spec.q, spec.r, opts.field);
  AqeccRecord rec = css_pair(f, tower, row.i, row.j);
  derive_params(rec, opts.distance, opts.enumeration_budget);
  row.regenerated = rec.display() + "_" + std::to_string(spec.q);
  row.detail = aqecc_json(rec);
  std::vector<std::string> bad;
  if (!rec.containment) bad.push_back("containment fails");
  if (rec.n != t[0] || rec.k != t[1]) bad.push_back("(n, k) differs");
  if (!rec.dx.exact() || !rec.dz.exact()) bad.push_back("dx/dz not pinned down");
  else if (rec.dx.value() != t[2] || rec.dz.value() != t[3]) bad.push_back("dx/dz differs");
  if (!rec.mds) bad.push_back("AQSB equality not certified");
  row.pass = bad.empty();
  for (const auto& b : bad) row.failure += (row.failure.empty() ? "" : "; ") + b;
  return row;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::vector<TableRowSpec> table_spec(int which) {
  std::vector<TableRowSpec> out;
  switch (which) {
    case 1:
      add_conv(out, 1, "mainI", 9, 4, {{10, 7, 2, 1, 6}, {10, 5, 2, 1, 8}}, "r=4");
      add_conv(out, 1, "mainI", 11, 5, {{12, 9, 2, 1, 6}, {12, 7, 2, 1, 8}, {12, 5, 2, 1, 10}}, "r=5");
      add_conv(out, 1, "mainI", 25, 6, {{26, 23, 2, 1, 6}, {26, 17, 2, 1, 12}, {26, 7, 2, 1, 22}}, "r=6");
      add_conv(out, 2, "mainII", 11, 2, {{12, 8, 2, 1, 7}, {12, 6, 2, 1, 9}, {12, 4, 2, 1, 11}}, "k=5");
      add_conv(out, 2, "mainII", 19, 2,
               {{20, 16, 2, 1, 7}, {20, 14, 2, 1, 9}, {20, 12, 2, 1, 11}, {20, 10, 2, 1, 13}, {20, 4, 2, 1, 19}},
               "k=9");
      add_conv(out, 3, "mainIII", 13, 6, {{7, 4, 2, 1, 6}}, "k=2");
      add_conv(out, 3, "mainIII", 17, 2, {{9, 6, 2, 1, 6}, {9, 4, 2, 1, 8}}, "k=9",
               "q - 1 = 16 has no divisor 9; read as r = 2, k = 8");
      add_conv(out, 3, "mainIII", 29, 7,
               {{15, 12, 2, 1, 6}, {15, 10, 2, 1, 8}, {15, 8, 2, 1, 10}, {15, 6, 2, 1, 12}, {15, 4, 2, 1, 14}},
               "k=4; r=7");
      break;
    case 2:
      add_quantum(out, 2, 1, "mainasyI", 9, 4, {{10, 6, 4, 2}, {10, 4, 4, 4}, {10, 2, 4, 6}});
      add_quantum(out, 2, 1, "mainasyI", 17, 8,
                  {{18, 14, 4, 2},
                   {18, 12, 4, 4},
                   {18, 10, 4, 6},
                   {18, 8, 4, 8},
                   {18, 6, 4, 10},
                   {18, 2, 4, 14},
                   {18, 2, 14, 4}});
      add_quantum(out, 2, 2, "mainasyII", 11, 2,
                  {{12, 8, 3, 3}, {12, 6, 3, 5}, {12, 4, 3, 7}, {12, 2, 3, 9}, {12, 2, 9, 3}, {12, 4, 7, 3}});
      add_quantum(out, 2, 2, "mainasyII", 13, 4,
                  {{14, 10, 3, 3}, {14, 2, 3, 11}, {14, 4, 7, 5}, {14, 8, 3, 5}, {14, 6, 3, 7}}, "k=3");
      break;
    case 3:
      add_quantum(out, 3, 1, "mainasyIII", 17, 2,
                  {{9, 6, 3, 2}, {9, 4, 3, 4}, {9, 2, 3, 6}, {9, 2, 7, 2}, {9, 4, 5, 2}});
      add_quantum(out, 3, 1, "mainasyIII", 29, 7,
                  {{15, 12, 3, 2},
                   {15, 10, 3, 4},
                   {15, 8, 3, 6},
                   {15, 6, 3, 8},
                   {15, 4, 3, 10},
                   {15, 2, 3, 12},
                   {15, 2, 13, 2},
                   {15, 4, 11, 2},
                   {15, 6, 9, 2},
                   {15, 8, 7, 2},
                   {15, 10, 5, 2},
                   {15, 2, 5, 10},
                   {15, 4, 9, 4}});
      break;
    default: throw PreconditionError("table must be 1, 2 or 3");
  }
  return out;
}

TableRow regenerate_row(const TableRowSpec& spec, const TableOptions& opts) {
  try {
    return spec.table == 1 ? conv_row(spec, opts) : quantum_row(spec, opts);
  } catch (const Error& e) {
    TableRow row;
    row.spec = spec;
    row.printed = spec.table == 1 ? conv_tuple(spec.printed, spec.q) : quantum_tuple(spec.printed, spec.q);
    row.regenerated = "error";
    row.failure = e.what();
    row.detail = Json::object();
    return row;
  }
}

bool TableReport::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

TableReport regenerate_table(int which, const TableOptions& opts) {
  TableReport rep;
  rep.which = which;
  for (const auto& spec : table_spec(which)) rep.rows.push_back(regenerate_row(spec, opts));
  return rep;
}

Json table_json(const TableReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json j{{"table", r.spec.table},
           {"block", r.spec.block},
           {"family", r.spec.family},
           {"q", r.spec.q},
           {"r", r.spec.r},
           {"i", r.i},
           {"printed", r.printed},
           {"printed_note", r.spec.printed_note},
           {"regenerated", r.regenerated},
           {"status", r.pass ? "pass" : "fail"},
           {"detail", r.detail}};
    if (r.spec.table != 1) j["j"] = r.j;
    if (!r.spec.correction.empty()) j["correction"] = r.spec.correction;
    if (!r.failure.empty()) j["failure"] = r.failure;
    rows.push_back(std::move(j));
  }
  return Json{{"table", rep.which}, {"rows", rows}, {"row_count", rep.rows.size()}, {"all_pass", rep.all_pass()}};
}

std::string table_csv(const TableReport& rep) {
  std::ostringstream os;
  if (rep.which == 1) {
    os << "block,family,q,r,i,printed,regenerated,n,k,gamma,memory,df_lo,df_hi,singleton,mds,status,note\n";
    for (const auto& r : rep.rows) {
      const auto& d = r.detail;
      const bool ok = d.contains("dual");
      os << r.spec.block << ',' << r.spec.family << ',' << r.spec.q << ',' << r.spec.r << ',' << r.i << ','
         << csv_escape(r.printed) << ',' << csv_escape(r.regenerated) << ',';
      if (ok) {
        const auto& t = d["dual"];
        os << t["n"] << ',' << t["k"] << ',' << t["gamma"] << ',' << t["memory"] << ',' << t["df_lo"] << ','
           << t["df_hi"] << ',' << d["singleton"] << ',' << (d["mds"].get<bool>() ? "true" : "false");
      } else {
        os << ",,,,,,,";
      }
      os << ',' << (r.pass ? "pass" : "fail") << ',' << csv_escape(r.spec.correction.empty() ? r.failure
                                                                                             : r.spec.correction)
         << '\n';
    }
  } else {
    os << "block,family,q,r,i,j,printed,regenerated,n,k,dx,dz,purity,mds,status,note\n";
    for (const auto& r : rep.rows) {
      const auto& d = r.detail;
      const bool ok = d.contains("dx");
      os << r.spec.block << ',' << r.spec.family << ',' << r.spec.q << ',' << r.spec.r << ',' << r.i << ',' << r.j
         << ',' << csv_escape(r.printed) << ',' << csv_escape(r.regenerated) << ',';
      if (ok) {
        os << d["n"] << ',' << d["k"] << ',' << d["dx"]["lower"] << ',' << d["dz"]["lower"] << ','
           << d["purity"].get<std::string>() << ',' << (d["mds"].get<bool>() ? "true" : "false");
      } else {
        os << ",,,,,";
      }
      os << ',' << (r.pass ? "pass" : "fail") << ',' << csv_escape(r.failure) << '\n';
    }
  }
  return os.str();
}

std::string table_text(const TableReport& rep) {
  std::ostringstream os;
  os << "table " << rep.which << ": " << rep.rows.size() << " rows\n";
  for (const auto& r : rep.rows) {
    os << (r.pass ? "  pass  " : "  FAIL  ") << r.spec.family << "  q=" << r.spec.q << " r=" << r.spec.r
       << " i=" << r.i;
    if (r.spec.table != 1) os << " j=" << r.j;
    os << "  printed " << r.printed << "  regenerated " << r.regenerated;
    if (!r.spec.correction.empty()) os << "  [" << r.spec.correction << "]";
    if (!r.failure.empty()) os << "  (" << r.failure << ")";
    os << '\n';
  }
  os << (rep.all_pass() ? "all rows regenerated\n" : "some rows did not regenerate\n");
  return os.str();
}

}  // namespace constamax
