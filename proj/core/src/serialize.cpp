#include "theta2/serialize.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "theta2/registry.hpp"

namespace theta2 {

const char* kExpansionFormatVersion = "1";

namespace {

std::string rat_str(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) throw std::runtime_error("bad rational: " + s);
  Rat r(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  mpq_canonicalize(r.get_mpq_t());
  return r;
}

}  // namespace

std::string serialize_expansion(const std::string& name, const FormExpansion& f) {
  std::ostringstream os;
  os << "theta2-expansion " << kExpansionFormatVersion << "\n";
  os << "name " << name << "\n";
  int order = f.comps.empty() ? 0 : f.comps[0].order();
  os << "order " << order << "\n";
  os << "weight " << f.j << " " << f.k2 << "\n";
  os << "pi_power " << f.pi_power << "\n";
  os << "group " << group_name(f.group) << "\n";
  os << "components " << f.comps.size() << "\n";
  for (size_t c = 0; c < f.comps.size(); ++c) {
    os << "component " << c << " " << f.comps[c].size() << "\n";
    for (const auto& [e, v] : f.comps[c].terms()) {
      os << e.A << " " << e.B << " " << e.C;
      for (int i = 0; i < 4; ++i) os << " " << rat_str(v.coeff(i));
      os << "\n";
    }
  }
  return os.str();
}

FormExpansion parse_expansion(const std::string& text, std::string* name_out) {
  std::istringstream is(text);
  std::string tag, version;
  is >> tag >> version;
  if (tag != "theta2-expansion" || version != kExpansionFormatVersion)
    throw std::runtime_error("expansion format mismatch");
  FormExpansion f;
  std::string key;
  std::string name;
  int order = 0;
  size_t ncomp = 0;
  std::string groupname;
  while (is >> key) {
    if (key == "name") is >> name;
    else if (key == "order") is >> order;
    else if (key == "weight") is >> f.j >> f.k2;
    else if (key == "pi_power") is >> f.pi_power;
    else if (key == "group") is >> groupname;
    else if (key == "components") {
      is >> ncomp;
      break;
    }
  }
  for (Group g : {Group::Sp4Z, Group::Gamma0, Group::Gamma1, Group::Gamma2,
                  Group::Gamma24, Group::Gamma48, Group::None})
    if (groupname == group_name(g)) f.group = g;
  for (size_t c = 0; c < ncomp; ++c) {
    size_t idx = 0, nterms = 0;
    is >> key >> idx >> nterms;
    if (key != "component" || idx != c)
      throw std::runtime_error("malformed expansion component header");
    std::vector<QSeries::Term> terms;
    for (size_t t = 0; t < nterms; ++t) {
      Expo e;
      std::string r0, r1, r2, r3;
      is >> e.A >> e.B >> e.C >> r0 >> r1 >> r2 >> r3;
      terms.emplace_back(
          e, Cyc8(parse_rat(r0), parse_rat(r1), parse_rat(r2), parse_rat(r3)));
    }
    f.comps.push_back(QSeries::from_terms(std::move(terms), order));
  }
  if (name_out) *name_out = name;
  return f;
}

std::string expansion_json(const std::string& name, const FormExpansion& f) {
  std::ostringstream os;
  int order = f.comps.empty() ? 0 : f.comps[0].order();
  os << "{\"name\":\"" << name << "\",\"order\":" << order << ",\"j\":" << f.j
     << ",\"k2\":" << f.k2 << ",\"pi_power\":" << f.pi_power << ",\"group\":\""
     << group_name(f.group) << "\",\"components\":[";
  for (size_t c = 0; c < f.comps.size(); ++c) {
    if (c) os << ",";
    os << "[";
    bool first = true;
    for (const auto& [e, v] : f.comps[c].terms()) {
      if (!first) os << ",";
      first = false;
      os << "{\"A\":" << e.A << ",\"B\":" << e.B << ",\"C\":" << e.C
         << ",\"coeff\":[";
      for (int i = 0; i < 4; ++i) {
        if (i) os << ",";
        os << "\"" << rat_str(v.coeff(i)) << "\"";
      }
      os << "]}";
    }
    os << "]";
  }
  os << "]}";
  return os.str();
}

ExpansionCache::ExpansionCache(std::string dir) : dir_(std::move(dir)) {
  if (dir_.empty()) {
    const char* env = std::getenv("THETA2_CACHE");
    if (env && *env) dir_ = env;
  }
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string ExpansionCache::path_for(const std::string& name, int order) const {
  return dir_ + "/" + name + "_n" + std::to_string(order) + "_v" +
         kExpansionFormatVersion + ".t2q";
}

std::optional<FormExpansion> ExpansionCache::load(const std::string& name,
                                                  int order) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(name, order));
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    std::string stored;
    FormExpansion f = parse_expansion(buf.str(), &stored);
    if (stored != name) return std::nullopt;
    return f;
  } catch (const std::exception&) {
    return std::nullopt;  // corrupted cache entry: recompute
  }
}

void ExpansionCache::store(const std::string& name, int order,
                           const FormExpansion& f) const {
  if (!enabled()) return;
  std::ofstream out(path_for(name, order));
  out << serialize_expansion(name, f);
}

FormExpansion ExpansionCache::eval_cached(const std::string& name, int order) const {
  if (auto hit = load(name, order)) return *hit;
  FormExpansion f = eval(named_form(name), order);
  store(name, order, f);
  return f;
}

}  // namespace theta2
