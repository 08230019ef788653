#include "dpcert/instance.hpp"

#include <fstream>
#include <sstream>

#include "dpcert/parse.hpp"

namespace dpcert {

Instance read_instance(std::istream& in, const std::string& name) {
  Instance inst;
  inst.name = name;
  bool have_domain = false, have_vars = false, have_bounds = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    auto where = [&] { return " (line " + std::to_string(lineno) + " of " + name + ")"; };
    if (key == "domain") {
      std::string spec;
      if (!(ls >> spec)) fail(Errc::InvalidInstance, "missing domain spec" + where());
      inst.domain = Domain::parse_spec(spec);
      have_domain = true;
    } else if (key == "vars") {
      if (!(ls >> inst.nvars)) fail(Errc::InvalidInstance, "bad vars line" + where());
      have_vars = true;
    } else if (key == "bounds") {
      std::uint32_t b;
      while (ls >> b) inst.bounds.push_back(b);
      have_bounds = true;
    } else if (key == "gen") {
      if (!have_domain || !have_vars)
        fail(Errc::InvalidInstance, "gen before domain/vars" + where());
      std::string rest;
      std::getline(ls, rest);
      inst.gens.push_back(parse_poly(rest, inst.nvars, inst.domain));
    } else if (key == "order") {
      std::string o;
      ls >> o;
      auto parsed = order_from_name(o);
      if (!parsed) fail(Errc::InvalidInstance, "unknown order '" + o + "'" + where());
      inst.order = *parsed;
    } else if (key == "context") {
      std::uint64_t p, e;
      std::uint32_t r;
      if (!(ls >> p >> r >> e)) fail(Errc::InvalidInstance, "bad context line" + where());
      inst.context = LiftingContext(p, r, e);
    } else {
      fail(Errc::InvalidInstance, "unknown key '" + key + "'" + where());
    }
  }
  if (!have_domain || !have_vars || !have_bounds)
    fail(Errc::InvalidInstance, name + " must carry domain, vars and bounds lines");
  if (inst.bounds.size() != inst.nvars)
    fail(Errc::InvalidInstance, name + ": bounds count != vars");
  return inst;
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::InvalidInstance, "cannot open " + path);
  std::string name = path;
  auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  return read_instance(in, name);
}

std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  for (const auto& note : inst.notes) out << "# " << note << "\n";
  out << "domain " << inst.domain.spec() << "\n";
  out << "vars " << inst.nvars << "\n";
  out << "bounds";
  for (auto b : inst.bounds) out << " " << b;
  out << "\n";
  for (const auto& g : inst.gens) out << "gen " << g.to_string() << "\n";
  if (inst.order) out << "order " << order_name(*inst.order) << "\n";
  if (inst.context)
    out << "context " << inst.context->p << " " << inst.context->r << " " << inst.context->e
        << "\n";
  return out.str();
}

FramePtr frame_of(const Instance& inst, std::uint64_t basis_cap) {
  if (!inst.framed())
    fail(Errc::InvalidInstance,
         inst.name + " has unbounded variables; only Groebner routes apply");
  return QuotientFrame::build(inst.domain, inst.nvars, inst.bounds, inst.gens, basis_cap);
}

std::vector<Polynomial> full_ideal_generators(const Instance& inst) {
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < inst.nvars; ++j) {
    if (inst.bounds[j] == 0) continue;
    gens.push_back(Polynomial::term(inst.domain, inst.nvars,
                                    Monomial::var(inst.nvars, j, inst.bounds[j]),
                                    inst.domain.one()));
  }
  for (const auto& g : inst.gens) gens.push_back(g);
  return gens;
}

LiftInput lift_input_of(const Instance& inst) {
  if (inst.gens.empty()) fail(Errc::InvalidInstance, inst.name + " has no generators");
  LiftInput input;
  input.domain = inst.domain;
  input.nvars = inst.nvars;
  input.bounds = inst.bounds;
  input.gens = inst.gens;
  input.f0 = inst.gens.front();
  input.name = inst.name;
  return input;
}

}  // namespace dpcert
