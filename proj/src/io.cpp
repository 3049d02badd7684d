#include "polyforge/io.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "polyforge/error.hpp"

namespace polyforge {

namespace {

using Json = nlohmann::ordered_json;

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream words(raw);
    Line line{number, {}};
    std::string w;
    while (words >> w) line.tokens.push_back(w);
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::size_t parse_count(const std::string& s, std::size_t line) {
  if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos) {
    fail_at(line, "expected a count, got '" + s + "'");
  }
  return static_cast<std::size_t>(std::stoul(s));
}

Scalar scalar_at(const std::string& s, std::size_t line) {
  try {
    return parse_scalar(s);
  } catch (const ParseError& e) {
    fail_at(line, e.what());
  }
}

// Header "<tag> <d> <n>"; returns (d, n).
std::pair<std::size_t, std::size_t> header(const std::vector<Line>& lines, const std::string& tag) {
  if (lines.empty()) throw ParseError("line 1: missing '" + tag + " <d> <n>' header");
  const Line& h = lines.front();
  if (h.tokens.size() != 3 || h.tokens[0] != tag) fail_at(h.number, "expected '" + tag + " <d> <n>' header");
  const std::size_t d = parse_count(h.tokens[1], h.number);
  const std::size_t n = parse_count(h.tokens[2], h.number);
  if (lines.size() - 1 != n) {
    const std::size_t where = lines.size() - 1 > n ? lines[n + 1].number : lines.back().number;
    fail_at(where, "count mismatch: header declares " + std::to_string(n) + " rows, found " +
                       std::to_string(lines.size() - 1));
  }
  return {d, n};
}

std::string join(const Vector& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + to_string(v[i]);
  return out;
}

Json rationals(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Vector rationals_from(const Json& a) {
  Vector v;
  for (const auto& x : a) v.push_back(parse_scalar(x.get<std::string>()));
  return v;
}

Json triangles(const TriangularChain& c) {
  Json a = Json::array();
  for (const auto& t : c.triangles) a.push_back({t[0], t[1], t[2]});
  return a;
}

TriangularChain chain_from(const Json& a) {
  TriangularChain c;
  for (const auto& t : a) {
    if (t.size() != 3) throw ParseError("triangle entries need three labels");
    c.triangles.push_back({t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>()});
  }
  return c;
}

}  // namespace

VPolytope parse_vpoly(std::string_view text) {
  const auto lines = content_lines(text);
  const auto [d, n] = header(lines, "vpoly");
  std::vector<LabeledPoint> pts;
  std::set<std::string> seen;
  for (std::size_t i = 1; i <= n; ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != d + 1) {
      fail_at(l.number, "expected a label and " + std::to_string(d) + " coordinates");
    }
    if (!seen.insert(l.tokens[0]).second) fail_at(l.number, "duplicate label '" + l.tokens[0] + "'");
    Vector x;
    for (std::size_t j = 1; j <= d; ++j) x.push_back(scalar_at(l.tokens[j], l.number));
    pts.push_back({l.tokens[0], std::move(x)});
  }
  return VPolytope(d, std::move(pts));
}

std::string emit_vpoly(const VPolytope& p) {
  std::string out = "vpoly " + std::to_string(p.dim()) + " " + std::to_string(p.size()) + "\n";
  for (const auto& v : p.vertices()) out += v.label + (p.dim() ? " " : "") + join(v.point, " ") + "\n";
  return out;
}

HPolytope parse_hpoly(std::string_view text) {
  const auto lines = content_lines(text);
  const auto [d, m] = header(lines, "hpoly");
  HPolytope h;
  h.dim = d;
  for (std::size_t i = 1; i <= m; ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != d + 1) fail_at(l.number, "expected " + std::to_string(d + 1) + " rationals");
    Hyperplane f;
    for (std::size_t j = 0; j < d; ++j) f.normal.push_back(scalar_at(l.tokens[j], l.number));
    f.offset = scalar_at(l.tokens[d], l.number);
    if (is_zero(f.normal)) fail_at(l.number, "zero normal");
    h.facets.push_back(std::move(f));
  }
  return h;
}

std::string emit_hpoly(const HPolytope& h) {
  std::string out = "hpoly " + std::to_string(h.dim) + " " + std::to_string(h.facets.size()) + "\n";
  for (const auto& f : h.facets) {
    const Hyperplane c = canonical_oriented(f);
    out += join(c.normal, " ") + " " + to_string(c.offset) + "\n";
  }
  return out;
}

Vector parse_vector(std::string_view text) {
  Vector v;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    v.push_back(parse_scalar(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return v;
}

Hyperplane parse_hyperplane(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("hyperplane '" + std::string(text) + "' needs the form a1,...,ad=c");
  Hyperplane h{parse_vector(text.substr(0, eq)), parse_scalar(text.substr(eq + 1))};
  if (is_zero(h.normal)) throw ParseError("hyperplane normal is zero");
  return h;
}

std::string certificate_to_json(const Certificate& cert) {
  Json j;
  j["kind"] = to_string(cert.kind);
  switch (cert.kind) {
    case CertificateKind::ChainCoversVertices:
      j["triangles"] = triangles(cert.chain);
      break;
    case CertificateKind::SubgraphTouchesFacets: {
      j["triangles"] = triangles(cert.chain);
      Json t = Json::array();
      for (const auto& [f, label] : cert.touches) t.push_back({{"facet", f}, {"vertex", label}});
      j["touches"] = t;
      break;
    }
    case CertificateKind::SkewGluing: {
      Json pieces = Json::array();
      for (const auto& p : cert.pieces) pieces.push_back({{"triangles", triangles(p)}});
      j["pieces"] = pieces;
      Json edges = Json::array();
      for (const auto& [a, b] : cert.connectors) edges.push_back({a, b});
      j["edges"] = edges;
      break;
    }
    case CertificateKind::RankWitness: {
      j["dimension"] = cert.space.dimension();
      j["ambientDim"] = cert.space.ambient_dim;
      j["labels"] = cert.space.labels;
      Json fields = Json::array();
      for (const auto& f : cert.space.basis) {
        Json field = Json::object();
        for (std::size_t v = 0; v < f.size(); ++v) field[cert.space.labels[v]] = rationals(f[v]);
        fields.push_back(field);
      }
      j["basisFields"] = fields;
      break;
    }
    case CertificateKind::SummandPair:
      if (!cert.summands) throw PreconditionError("summand pair certificate without summands");
      j["summands"] = {emit_vpoly(cert.summands->q), emit_vpoly(cert.summands->r)};
      break;
  }
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
  try {
    Certificate c;
    c.kind = parse_certificate_kind(j.at("kind").get<std::string>());
    switch (c.kind) {
      case CertificateKind::ChainCoversVertices:
        c.chain = chain_from(j.at("triangles"));
        break;
      case CertificateKind::SubgraphTouchesFacets:
        c.chain = chain_from(j.at("triangles"));
        for (const auto& t : j.at("touches")) c.touches.emplace_back(t.at("facet").get<std::size_t>(), t.at("vertex").get<std::string>());
        break;
      case CertificateKind::SkewGluing:
        for (const auto& p : j.at("pieces")) c.pieces.push_back(chain_from(p.at("triangles")));
        for (const auto& e : j.at("edges")) {
          if (e.size() != 2) throw ParseError("connector edges need two labels");
          c.connectors.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
        break;
      case CertificateKind::RankWitness:
        c.space.ambient_dim = j.at("ambientDim").get<std::size_t>();
        c.space.labels = j.at("labels").get<std::vector<std::string>>();
        for (const auto& f : j.at("basisFields")) {
          std::vector<Vector> field;
          for (const auto& label : c.space.labels) field.push_back(rationals_from(f.at(label)));
          c.space.basis.push_back(std::move(field));
        }
        if (j.at("dimension").get<std::size_t>() != c.space.dimension()) {
          throw ParseError("certificate dimension disagrees with its basis");
        }
        break;
      case CertificateKind::SummandPair: {
        const auto& s = j.at("summands");
        if (s.size() != 2) throw ParseError("summand pair needs two vpoly blocks");
        c.summands = SummandPair{parse_vpoly(s[0].get<std::string>()), parse_vpoly(s[1].get<std::string>())};
        break;
      }
    }
    return c;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

std::string isomorphism_to_json(const LatticeIsomorphism& iso) {
  Json j;
  Json v = Json::array();
  for (const auto& [a, b] : iso.vertex_map) v.push_back({a, b});
  Json f = Json::array();
  for (const auto& [a, b] : iso.facet_map) f.push_back({a, b});
  j["vertices"] = v;
  j["facets"] = f;
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw PreconditionError("cannot write '" + path + "'");
    out << content;
    out.close();
    if (!out) throw PreconditionError("cannot write '" + path + "'");
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace polyforge
