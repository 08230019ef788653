#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpcert/divpow.hpp"
#include "dpcert/families.hpp"
#include "dpcert/instance.hpp"
#include "dpcert/parse.hpp"

using json = nlohmann::ordered_json;
using namespace dpcert;

namespace {

struct GlobalOpts {
  std::string format = "text";
  std::uint64_t seed = 20240915;
  std::uint64_t cap = kDefaultBasisCap;
  unsigned jobs = 1;
  bool timings = false;
};

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

json timings_obj(const GlobalOpts& g, double t0) {
  json t = json::object();
  if (g.timings) t["total_ms"] = static_cast<std::int64_t>(now_ms() - t0);
  return t;
}

json floor_json(const FloorHypothesisResult& floor, std::size_t nvars) {
  json rows = json::array();
  Domain q = Domain::rationals();
  for (const auto& row : floor.rows) {
    Polynomial m = Polynomial::term(q, nvars, row.monomial, q.one());
    rows.push_back({{"monomial", m.to_string()},
                    {"floor_sum", row.floor_sum},
                    {"ok", row.ok}});
  }
  return rows;
}

json obstruction_json(const ObstructionReport& rep, std::size_t nvars, const GlobalOpts& g,
                      double t0) {
  json out;
  out["instance"] = rep.instance;
  out["context"] = {{"p", rep.ctx.p}, {"r", rep.ctx.r}, {"e", rep.ctx.e}};
  out["method"] = method_name(rep.method_used);
  out["verdict"] = verdict_name(rep.verdict);
  json cert = json::object();
  if (rep.membership) {
    cert["kind"] = "remainder";
    cert["member"] = rep.membership->member;
    cert["remainder"] = rep.membership->remainder.to_string();
  } else if (rep.alpha) {
    cert["kind"] = "alpha";
    const Domain fp = Domain::prime_field(rep.ctx.p);
    cert["alpha"] = fp.to_string(rep.alpha->alpha);
    Polynomial target =
        Polynomial::term(fp, rep.alpha->target.nvars(), rep.alpha->target, fp.one());
    cert["target_monomial"] = target.to_string();
  }
  out["certificate"] = cert;
  out["floor_hypothesis"] = floor_json(rep.floor, nvars);
  out["timings"] = timings_obj(g, t0);
  return out;
}

// Runs fn(i) for i < count, preserving output order.
std::vector<std::string> parallel_map(std::size_t count, unsigned jobs,
                                      const std::function<std::string(std::size_t)>& fn) {
  std::vector<std::string> out(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  unsigned width = std::min<unsigned>(jobs, static_cast<unsigned>(count));
  for (unsigned t = 0; t < width; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) out[i] = fn(i);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

int exit_code_for(Verdict v) { return v == Verdict::HypothesisNotMet ? 2 : 0; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact divided-power and liftability checks on Artinian monomial-framed algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--format", g.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "Seed for randomized sweeps");
  app.add_option("--cap", g.cap, "Monomial basis cap for frame construction");
  app.add_option("--jobs", g.jobs, "Parallel workers for independent instance files");
  app.add_flag("--timings", g.timings, "Include wall-clock timings in reports");

  // wp
  auto* cmd_wp = app.add_subcommand("wp", "Evaluate the w_p operator on a polynomial");
  std::string wp_domain = "q";
  std::size_t wp_vars = 0;
  std::uint64_t wp_p = 2;
  std::size_t wp_cap_terms = kDefaultWpTermCap;
  std::string wp_text;
  cmd_wp->add_option("--domain", wp_domain, "Coefficient domain spec (fp:<p>, q, qsqrt:<d>)");
  cmd_wp->add_option("--vars", wp_vars, "Number of variables")->required();
  cmd_wp->add_option("--p", wp_p, "The prime p")->required();
  cmd_wp->add_option("--cap-terms", wp_cap_terms, "Term-count cap for the expansion");
  cmd_wp->add_option("poly", wp_text, "Polynomial text")->required();

  // dp-check
  auto* cmd_dp = app.add_subcommand("dp-check", "Decide divided power existence for instances");
  std::vector<std::string> dp_files;
  std::size_t dp_sweep = 0;
  cmd_dp->add_option("--file,file", dp_files, "Instance file(s)")->required();
  cmd_dp->add_option("--sweep", dp_sweep,
                     "When a structure exists, also sweep the axioms on this many samples");

  // lift-check
  auto* cmd_lift = app.add_subcommand("lift-check", "Run the liftability obstruction");
  std::vector<std::string> lift_files;
  std::uint64_t lift_p = 0, lift_e = 0;
  std::uint32_t lift_r = 0;
  std::string lift_method = "auto";
  cmd_lift->add_option("--file,file", lift_files, "Instance file(s)")->required();
  cmd_lift->add_option("--p", lift_p, "Residue characteristic (defaults to the file context)");
  cmd_lift->add_option("--r", lift_r, "Frobenius stage r with q = p^r");
  cmd_lift->add_option("--e", lift_e, "Socle degree bound: m_R^(e+1) = 0");
  cmd_lift->add_option("--method", lift_method, "membership | certificate | auto")
      ->check(CLI::IsMember({"membership", "certificate", "auto"}));

  // link
  auto* cmd_link = app.add_subcommand("link", "Link the first generator inside the pure-power frame");
  std::string link_file;
  cmd_link->add_option("--file,file", link_file, "Instance file")->required();

  // length
  auto* cmd_len = app.add_subcommand("length", "Quotient length via a reduced Groebner basis");
  std::string len_file;
  std::string len_order;
  cmd_len->add_option("--file,file", len_file, "Instance file")->required();
  cmd_len->add_option("--order", len_order, "degrevlex | lex (overrides the file)")
      ->check(CLI::IsMember({"degrevlex", "lex"}));

  // gen
  auto* cmd_gen = app.add_subcommand("gen", "Generate an example-family instance");
  std::string gen_family_name;
  FamilyParams gen_params;
  std::string gen_out;
  cmd_gen->add_option("--family", gen_family_name, "hypersurface-q | quadratic | direct-system | gorenstein-witness")
      ->required()
      ->check(CLI::IsMember({"hypersurface-q", "quadratic", "direct-system", "gorenstein-witness"}));
  cmd_gen->add_option("--p", gen_params.p, "Characteristic p");
  cmd_gen->add_option("--r", gen_params.r, "Frobenius stage (hypersurface-q, gorenstein-witness)");
  cmd_gen->add_option("--n", gen_params.index, "Stage index (direct-system)");
  cmd_gen->add_option("-o,--output", gen_out, "Output path (stdout when omitted)");

  // verify-koblitz
  auto* cmd_kob = app.add_subcommand("verify-koblitz", "Run the composite length-36 example check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  bool as_json = g.format == "json";
  double t0 = now_ms();

  try {
    if (*cmd_wp) {
      Domain dom = Domain::parse_spec(wp_domain);
      Polynomial f = parse_poly(wp_text, wp_vars, dom);
      Polynomial w = wp(f, wp_p, wp_cap_terms);
      if (as_json) {
        json out;
        out["command"] = "wp";
        out["p"] = wp_p;
        out["input"] = f.to_string();
        out["wp"] = w.to_string();
        out["timings"] = timings_obj(g, t0);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << w.to_string() << "\n";
      }
      return 0;
    }

    if (*cmd_dp) {
      auto run_one = [&](std::size_t i) -> std::string {
        double ti = now_ms();
        Instance inst = read_instance_file(dp_files[i]);
        FramePtr frame = frame_of(inst, g.cap);
        DpExistenceReport rep = dp_exists(*frame);
        json out;
        out["command"] = "dp-check";
        out["instance"] = inst.name;
        out["verdict"] = rep.exists;
        json cert = json::object();
        if (!rep.exists) {
          cert["kind"] = "remainder";
          cert["generator"] = rep.generator;
          cert["remainder"] = rep.remainder.to_string();
        }
        out["certificate"] = cert;
        if (rep.exists && dp_sweep > 0) {
          AxiomReport sweep = check_delta_axioms(DPStructure::canonical(frame), dp_sweep, g.seed);
          out["sweep"] = {{"ok", sweep.ok},
                          {"samples", sweep.samples},
                          {"seed", sweep.seed},
                          {"failure", sweep.failure}};
        }
        out["timings"] = timings_obj(g, ti);
        if (as_json) return out.dump(2);
        std::string text = "dp-check " + inst.name + ": divided powers " +
                           (rep.exists ? "exist" : "do not exist");
        if (!rep.exists)
          text += "\n  generator: " + rep.generator + "\n  remainder: " +
                  rep.remainder.to_string();
        return text;
      };
      for (const auto& s : parallel_map(dp_files.size(), g.jobs, run_one)) std::cout << s << "\n";
      return 0;
    }

    if (*cmd_lift) {
      int code = 0;
      auto run_one = [&](std::size_t i) -> std::string {
        Instance inst = read_instance_file(lift_files[i]);
        std::uint64_t p = lift_p ? lift_p : (inst.context ? inst.context->p : 0);
        std::uint32_t r = lift_r ? lift_r : (inst.context ? inst.context->r : 0);
        std::uint64_t e = lift_e ? lift_e : (inst.context ? inst.context->e : 0);
        if (p == 0 || r == 0)
          fail(Errc::InvalidInstance,
               inst.name + " carries no context line; pass --p/--r/--e explicitly");
        LiftingContext ctx(p, r, e);
        Method method = *method_from_name(lift_method);
        ObstructionReport rep = lift_obstruction(lift_input_of(inst), ctx, method, g.cap);
        json out = obstruction_json(rep, inst.nvars, g, t0);
        if (exit_code_for(rep.verdict) != 0) code = exit_code_for(rep.verdict);
        if (as_json) return out.dump(2);
        std::string text = "lift-check " + inst.name + " (p=" + std::to_string(ctx.p) +
                           ", r=" + std::to_string(ctx.r) + ", e=" + std::to_string(ctx.e) +
                           ", method=" + method_name(rep.method_used) +
                           "): " + verdict_name(rep.verdict);
        if (rep.membership && !rep.membership->member)
          text += "\n  remainder: " + rep.membership->remainder.to_string();
        if (rep.alpha) {
          Domain fp = Domain::prime_field(ctx.p);
          text += "\n  alpha = " + fp.to_string(rep.alpha->alpha) + " at " +
                  Polynomial::term(fp, rep.alpha->target.nvars(), rep.alpha->target, fp.one())
                      .to_string();
        }
        return text;
      };
      for (const auto& s : parallel_map(lift_files.size(), g.jobs, run_one)) std::cout << s << "\n";
      return code;
    }

    if (*cmd_link) {
      Instance inst = read_instance_file(link_file);
      if (inst.gens.empty()) fail(Errc::InvalidInstance, "link needs a generator");
      FramePtr b0 = QuotientFrame::build(inst.domain, inst.nvars, inst.bounds, {}, g.cap);
      LinkageResult lk = link(*b0, inst.gens.front());
      if (as_json) {
        json out;
        out["command"] = "link";
        out["instance"] = inst.name;
        out["dim_ambient"] = b0->basis_size();
        out["dim_linked"] = lk.dim_linked;
        out["dim_quotient"] = lk.dim_quotient;
        out["gorenstein"] = lk.gorenstein;
        out["socle_dim"] = socle_dim(*lk.linked);
        json gens = json::array();
        for (const auto& v : lk.annihilator_gens) gens.push_back(v.to_string());
        out["annihilator_generators"] = gens;
        out["timings"] = timings_obj(g, t0);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "link " << inst.name << ": dim C0 = " << lk.dim_linked
                  << ", dim A0 = " << lk.dim_quotient << ", dim B0 = " << b0->basis_size()
                  << ", gorenstein = " << (lk.gorenstein ? "true" : "false") << "\n";
        for (const auto& v : lk.annihilator_gens)
          std::cout << "  annihilator gen: " << v.to_string() << "\n";
      }
      return 0;
    }

    if (*cmd_len) {
      Instance inst = read_instance_file(len_file);
      MonomialOrder order = MonomialOrder::Degrevlex;
      if (inst.order) order = *inst.order;
      if (!len_order.empty()) order = *order_from_name(len_order);
      GroebnerBasis gb = buchberger(full_ideal_generators(inst), order);
      auto len = quotient_length(gb);
      if (as_json) {
        json out;
        out["command"] = "length";
        out["instance"] = inst.name;
        out["order"] = order_name(order);
        if (len)
          out["length"] = *len;
        else
          out["length"] = "infinite";
        out["basis_size"] = gb.elements().size();
        out["timings"] = timings_obj(g, t0);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << (len ? std::to_string(*len) : std::string("infinite")) << "\n";
      }
      return 0;
    }

    if (*cmd_gen) {
      Family fam = *family_from_name(gen_family_name);
      Instance inst = gen_family(fam, gen_params);
      std::string text = write_instance(inst);
      if (gen_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(gen_out);
        if (!out) fail(Errc::InvalidInstance, "cannot write " + gen_out);
        out << text;
      }
      return 0;
    }

    if (*cmd_kob) {
      KoblitzReport rep = verify_koblitz();
      if (as_json) {
        json out;
        out["command"] = "verify-koblitz";
        out["dp"] = !rep.dp_absent;  // divided power existence verdict
        out["obstructed"] = rep.obstruction == Verdict::Obstructed;
        out["len_char2"] = {{"degrevlex", rep.len_char2_degrevlex}, {"lex", rep.len_char2_lex}};
        out["len_char0"] = {{"degrevlex", rep.len_char0_degrevlex}, {"lex", rep.len_char0_lex}};
        out["pass"] = rep.pass;
        out["timings"] = timings_obj(g, t0);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "verify-koblitz: dp = " << (rep.dp_absent ? "false" : "true")
                  << ", obstructed = " << (rep.obstruction == Verdict::Obstructed ? "true" : "false")
                  << ", len_char2 = " << rep.len_char2_degrevlex << "/" << rep.len_char2_lex
                  << ", len_char0 = " << rep.len_char0_degrevlex << "/" << rep.len_char0_lex
                  << " => " << (rep.pass ? "PASS" : "FAIL") << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::ResourceCap ? 3 : 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  }
  return 64;
}
