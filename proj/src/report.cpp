#include "tc/report.hpp"

#include <algorithm>
#include <sstream>

#include "tc/error.hpp"

namespace tc {

namespace {

Document header(const Problem& pr, const char* command) {
  Document d;
  d["schema"] = 1;
  d["command"] = command;
  d["char"] = pr.field->characteristic();
  d["ext_degree"] = pr.field->degree();
  d["cubic"] = pr.curve.F.to_string();
  Document gens = Document::array();
  for (const auto& g : pr.ideal.gens) gens.push_back(g.to_string());
  d["generators"] = gens;
  return d;
}

Document rational(const Rational& r) { return r.to_string(); }

}  // namespace

Report run_check(const Problem& pr, const RunOptions& opts) {
  if (!pr.candidate) throw Error(ErrorCode::missing_field, "check needs a candidate");
  Report rep;
  Document d = header(pr, "check");
  d["candidate"] = pr.candidate->to_string();
  ClosureCertificate cert = tight_closure_member(pr.ideal, *pr.candidate, {opts.max_extension, opts.threads});
  d["verdict"] = cert.member ? "member" : "non-member";
  d["in_ideal"] = cert.in_ideal;
  d["degree"] = cert.m;
  d["split_extension"] = cert.extension_degree;
  Document rows = Document::array();
  for (const auto& s : cert.summands) {
    Document r;
    r["rank"] = s.rank;
    r["degree"] = s.degree;
    r["negative"] = s.negative;
    r["c_vanishes"] = s.vanishes.value_or(false);
    rows.push_back(r);
  }
  d["summands"] = rows;
  d["supersingular"] = pr.curve.supersingular;
  if (pr.curve.supersingular) {
    const int e_max = opts.e_max.value_or(pr.e_max);
    FrobeniusResult fr = frobenius_member(pr.ideal, *pr.candidate, e_max);
    Document f;
    f["e_max"] = e_max;
    f["e_tested"] = fr.e_tested;
    if (fr.found_at_e) {
      f["status"] = "found";
      f["found_at_e"] = *fr.found_at_e;
    } else {
      // membership via Frobenius powers is only semi-decidable
      f["status"] = cert.member ? "inconclusive" : "not-found";
      f["found_at_e"] = nullptr;
    }
    d["frobenius"] = f;
  }
  rep.exit_code = cert.member ? 0 : 1;
  rep.doc = std::move(d);
  return rep;
}

Report run_closure(const Problem& pr, const RunOptions& opts) {
  if (pr.candidate) throw Error(ErrorCode::bad_candidate, "closure takes no candidate");
  Report rep;
  Document d = header(pr, "closure");
  ClosureIdeal ci = tight_closure_ideal(pr.ideal, {opts.max_extension, opts.threads});
  Document gens = Document::array();
  for (const auto& g : ci.generators) gens.push_back(g.to_string());
  d["closure_generators"] = gens;
  d["mu_min"] = rational(ci.slopes.mu_min);
  d["mu_max"] = rational(ci.slopes.mu_max);
  d["threshold_low"] = rational(ci.slopes.threshold_low);
  d["threshold_high"] = rational(ci.slopes.threshold_high);
  d["k"] = rational(ci.slopes.k);
  d["semistable"] = ci.slopes.semistable;
  Document rows = Document::array();
  for (const auto& p : ci.pieces) {
    Document r;
    r["m"] = p.m;
    r["source"] = p.source;
    r["closure_dim"] = p.closure_dim;
    r["ideal_dim"] = p.ideal_dim;
    r["ring_dim"] = p.ring_dim;
    rows.push_back(r);
  }
  d["pieces"] = rows;
  rep.doc = std::move(d);
  return rep;
}

Report run_decompose(const Problem& pr, const RunOptions& opts) {
  int m;
  if (opts.degree) {
    m = *opts.degree;
  } else if (pr.candidate && !pr.candidate->is_zero()) {
    m = pr.candidate->degree();
  } else {
    throw Error(ErrorCode::missing_field, "decompose needs --degree or a candidate");
  }
  Report rep;
  Document d = header(pr, "decompose");
  d["m"] = m;
  SyzygyBundle B = syzygy_bundle(pr.ideal, m);
  Decomposition D = decompose_bundle(B, {opts.max_extension, 1});
  d["rank"] = B.rank;
  d["bundle_degree"] = B.degree;
  d["split_extension"] = D.extension_degree;
  d["end_dim"] = D.algebra.dim();
  d["radical_dim"] = D.algebra.radical.size();
  Document rows = Document::array();
  for (const auto& s : D.summands) {
    CohomologyDims h = cohomology_dims(s.module, 0, {s.rank, s.degree});
    Document r;
    r["rank"] = s.rank;
    r["degree"] = s.degree;
    r["h0"] = h.h0;
    r["h1"] = h.h1;
    rows.push_back(r);
  }
  d["summands"] = rows;
  rep.doc = std::move(d);
  return rep;
}

Report run_info(const Problem& pr, const RunOptions&) {
  Report rep;
  Document d = header(pr, "info");
  d["smooth"] = true;  // build_problem rejects singular cubics
  d["hasse"] = element_to_string(*pr.field, pr.curve.hasse);
  d["supersingular"] = pr.curve.supersingular;
  Document deg = Document::array();
  for (int x : pr.ideal.degrees) deg.push_back(x);
  d["generator_degrees"] = deg;
  if (pr.candidate) d["candidate"] = pr.candidate->to_string();
  rep.doc = std::move(d);
  return rep;
}

namespace {

std::string scalar(const Document& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

}  // namespace

std::string render_text(const Document& doc) {
  std::size_t width = 0;
  for (auto it = doc.begin(); it != doc.end(); ++it) width = std::max(width, it.key().size());
  std::ostringstream out;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const Document& v = it.value();
    std::string key = it.key();
    key.resize(width, ' ');
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << key << " :\n";
      std::vector<std::string> cols;
      for (auto c = v.front().begin(); c != v.front().end(); ++c) cols.push_back(c.key());
      std::vector<std::size_t> w(cols.size());
      for (std::size_t i = 0; i < cols.size(); ++i) {
        w[i] = cols[i].size();
        for (const auto& row : v) w[i] = std::max(w[i], scalar(row.at(cols[i])).size());
      }
      auto line = [&](auto get) {
        std::string s = "   ";
        for (std::size_t i = 0; i < cols.size(); ++i) {
          std::string cell = get(i);
          s += " " + std::string(w[i] - cell.size(), ' ') + cell;
        }
        out << s << "\n";
      };
      line([&](std::size_t i) { return cols[i]; });
      for (const auto& row : v) line([&](std::size_t i) { return scalar(row.at(cols[i])); });
    } else if (v.is_array()) {
      std::string s;
      for (const auto& e : v) s += (s.empty() ? "" : ", ") + scalar(e);
      out << key << " : [" << s << "]\n";
    } else if (v.is_object()) {
      out << key << " :";
      for (auto c = v.begin(); c != v.end(); ++c) out << " " << c.key() << "=" << scalar(c.value());
      out << "\n";
    } else {
      out << key << " : " << scalar(v) << "\n";
    }
  }
  return out.str();
}

std::string render_json(const Document& doc) { return doc.dump(2) + "\n"; }

}  // namespace tc
