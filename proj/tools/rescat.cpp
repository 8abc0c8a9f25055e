// rescat: command-line front end for the module and classification engine.
//
//   rescat resolve       --ring R --module M... [--length N]
//   rescat invariants    --ring R [--module M...]
//   rescat profile       --ring R --module M...
//   rescat gcf-validate  --ring R --chain C
//   rescat phi           --ring R --module M...
//   rescat member        --ring R --descriptor D --module M...
//   rescat witness       --ring R --chain C [--catalog K] [--budget N]
//   rescat split         --ring R --module M...
//   rescat verify        [--suite S] [--threads N] [--char p]
//
// Exit codes: 0 success (including negative verdicts), 1 failed property or
// internal invariant, 2 input error, 3 resource cutoff.

#include <CLI11.hpp>

#include <iostream>
#include <new>
#include <sstream>

#include "rescat/errors.hpp"
#include "rescat/io.hpp"
#include "rescat/verify.hpp"

using namespace rescat;

namespace {

struct Options {
  std::string ring;
  std::vector<std::string> modules;
  std::string chain;
  std::string descriptor;
  std::string catalog;
  long max_steps = 0;
  int budget = 64;
  int length = -1;
  std::string suite = "all";
  int threads = 1;
  uint32_t p = 101;
};

struct Workspace {
  GradedRingPtr R;
  std::vector<Module> modules;
  std::optional<Chain> chain;
  std::optional<Descriptor> descriptor;
  std::optional<PrimeCatalog> catalog;
};

Workspace load(const Options& o, bool need_modules) {
  if (o.ring.empty()) throw InputError("--ring is required");
  Workspace w;
  w.R = load_ring(o.ring);
  if (need_modules && o.modules.empty()) throw InputError("at least one --module is required");
  for (const std::string& m : o.modules) w.modules.push_back(load_module(m, w.R));
  if (!o.chain.empty()) w.chain = load_chain(o.chain, w.R);
  if (!o.descriptor.empty()) w.descriptor = load_descriptor(o.descriptor, w.R);
  if (!o.catalog.empty()) w.catalog = load_catalog(o.catalog, w.R);
  return w;
}

std::string chain_block(const Chain& c) { return c.length() == 0 ? "(empty)\n" : c.str(); }

int cmd_resolve(const Options& o, std::ostream& out) {
  Workspace w = load(o, true);
  const int steps = o.length >= 0 ? o.length : w.R->dim() + 2;
  for (std::size_t i = 0; i < w.modules.size(); ++i) {
    const Module& M = w.modules[i];
    Resolution res = M.resolution(steps);
    out << "module " << o.modules[i] << "\n" << format_module(M.minimized());
    out << "betti (rank, degrees)\n" << format_betti(res);
    out << "pd " << pd(M).str() << "\n";
  }
  return 0;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  Workspace w = load(o, false);
  if (w.modules.empty()) {
    const RingInvariants& inv = w.R->invariants();
    out << format_ring(*w.R) << "dim " << inv.dim << ", depth " << inv.depth << ", codim " << inv.codim << "\n"
        << "cm " << (inv.cm ? "yes" : "no") << ", gorenstein " << (inv.gorenstein ? "yes" : "no")
        << ", hypersurface " << (inv.hypersurface ? "yes" : "no") << ", regular " << (inv.regular ? "yes" : "no")
        << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < w.modules.size(); ++i) {
    const Module& M = w.modules[i];
    out << "module " << o.modules[i] << ": pd " << pd(M).str() << ", depth " << depth(M).str() << ", NF "
        << nonfree_locus(M).str() << ", IPD " << ipd_locus(M).str() << "\n";
  }
  return 0;
}

int cmd_profile(const Options& o, std::ostream& out) {
  Workspace w = load(o, true);
  for (std::size_t i = 0; i < w.modules.size(); ++i) {
    const Module& M = w.modules[i];
    out << "module " << o.modules[i] << "\n";
    if (pd(M).finite()) {
      out << "pd profile\n" << chain_block(pd_profile(M));
    } else {
      out << "pd profile: infinite, IPD " << ipd_locus(M).str() << "\n";
    }
    if (w.R->is_gorenstein()) out << "codepth profile\n" << chain_block(codepth_profile(M));
  }
  return 0;
}

int cmd_gcf_validate(const Options& o, std::ostream& out) {
  if (o.chain.empty()) throw InputError("--chain is required");
  Workspace w = load(o, false);
  GcfReport r = gcf_validate(*w.chain);
  if (r.valid)
    out << "VALID\n";
  else
    out << "INVALID at level " << r.violated_level << ": " << r.reason << "\n";
  return 0;
}

int cmd_phi(const Options& o, std::ostream& out) {
  Workspace w = load(o, true);
  bool finite = true;
  for (const Module& M : w.modules) finite = finite && (M.is_zero() || pd(M).finite());
  Descriptor D;
  if (finite) {
    D.kind = Descriptor::FinPD;
    D.f = phi_pd(w.modules);
  } else if (w.R->is_hypersurface()) {
    HyperDescriptor h = hyper_phi(w.modules);
    D.kind = Descriptor::Hyper;
    D.W = h.W;
    D.f = h.f;
  } else if (w.R->is_gorenstein()) {
    D.kind = Descriptor::Dominant;
    D.f = phi_dominant(w.modules);
  } else {
    throw PreconditionError("generators of infinite projective dimension over a non-Gorenstein ring");
  }
  out << format_descriptor(D);
  return 0;
}

int cmd_member(const Options& o, std::ostream& out) {
  if (o.descriptor.empty()) throw InputError("--descriptor is required");
  Workspace w = load(o, true);
  for (std::size_t i = 0; i < w.modules.size(); ++i) {
    Verdict v = descriptor_member(*w.descriptor, w.modules[i]);
    out << "module " << o.modules[i] << ": " << (v.member ? "MEMBER" : "NON-MEMBER");
    if (!v.member) out << " (" << v.detail << ")";
    out << "\n";
  }
  return 0;
}

int cmd_witness(const Options& o, std::ostream& out) {
  if (o.chain.empty()) throw InputError("--chain is required");
  Workspace w = load(o, false);
  GcfReport r = gcf_validate(*w.chain);
  if (!r.valid) throw InputError(o.chain + ": not grade consistent: " + r.reason);
  WitnessSearch s = gcf_witness(w.R, *w.chain, o.budget, w.catalog ? &*w.catalog : nullptr);
  if (!s.found) {
    std::ostringstream msg;
    msg << "no witness after " << s.examined << " candidates; level " << s.uncovered_level << " not reached";
    if (s.examined >= o.budget) throw ResourceError(msg.str());
    throw InvariantError(msg.str());
  }
  out << "witness with " << s.modules.size() << " module(s)\n";
  for (std::size_t i = 0; i < s.modules.size(); ++i)
    out << "# module " << i + 1 << "\n" << format_module(s.modules[i].minimized());
  out << "pd profile\n" << chain_block(phi_pd(s.modules));
  return 0;
}

void report_sequence(std::ostream& out, const char* label, const ExactSequence& s) {
  SequenceCheck c = verify_exact(s);
  out << label << ": " << (c.ok ? "exact" : "NOT EXACT (" + c.failure + ")") << ", Hilbert "
      << (hilbert_additive(s) ? "additive" : "NOT additive") << "\n";
}

int cmd_split(const Options& o, std::ostream& out) {
  Workspace w = load(o, true);
  int code = 0;
  for (std::size_t i = 0; i < w.modules.size(); ++i) {
    LciSplit s = lci_split(w.modules[i]);
    out << "module " << o.modules[i] << "\n";
    out << "approximation index " << s.approx.n << "\n";
    report_sequence(out, "approximation 0 -> F -> C -> X -> 0", s.approx.seq);
    report_sequence(out, "pushout 0 -> X -> L -> cosyz C -> 0", s.pushout);
    report_sequence(out, "free side 0 -> F -> Q -> L -> 0", s.free_side);
    ExtInt pl = pd(s.pd_part);
    bool mcm = is_mcm(s.mcm_part);
    out << "pd part (pd " << pl.str() << ")\n" << format_module(s.pd_part.minimized());
    out << "mcm part (" << (mcm ? "MCM" : "NOT MCM") << ")\n" << format_module(s.mcm_part.minimized());
    const ExactSequence* seqs[] = {&s.approx.seq, &s.pushout, &s.free_side};
    for (const ExactSequence* q : seqs)
      if (!verify_exact(*q).ok) code = 1;
    if (!pl.finite() || !mcm) code = 1;
  }
  return code;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions v;
  v.threads = o.threads;
  v.p = o.p;
  std::vector<CheckResult> r = run_suite(o.suite, v);
  out << format_report(r);
  return report_exit_code(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resolving subcategories of graded modules over Z/p"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub, bool modules, bool chain, bool descriptor, bool catalog) {
    sub->add_option("--ring", o.ring, "ring file")->required();
    if (modules) sub->add_option("--module", o.modules, "module file (repeatable)");
    if (chain) sub->add_option("--chain", o.chain, "chain file");
    if (descriptor) sub->add_option("--descriptor", o.descriptor, "descriptor file");
    if (catalog) sub->add_option("--catalog", o.catalog, "prime catalog file");
    sub->add_option("--max-steps", o.max_steps, "cap on S-pair reductions per Groebner computation");
  };

  using Handler = int (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> verbs;
  CLI::App* resolve = app.add_subcommand("resolve", "minimal presentation and Betti table");
  add_common(resolve, true, false, false, false);
  resolve->add_option("--length", o.length, "number of resolution steps");
  verbs.emplace_back(resolve, cmd_resolve);
  CLI::App* inv = app.add_subcommand("invariants", "ring or module invariants");
  add_common(inv, true, false, false, false);
  verbs.emplace_back(inv, cmd_invariants);
  CLI::App* prof = app.add_subcommand("profile", "pd and codepth profiles");
  add_common(prof, true, false, false, false);
  verbs.emplace_back(prof, cmd_profile);
  CLI::App* gcf = app.add_subcommand("gcf-validate", "check a chain for grade consistency");
  add_common(gcf, false, true, false, false);
  verbs.emplace_back(gcf, cmd_gcf_validate);
  CLI::App* phi = app.add_subcommand("phi", "descriptor of the closure of the given modules");
  add_common(phi, true, false, false, false);
  verbs.emplace_back(phi, cmd_phi);
  CLI::App* member = app.add_subcommand("member", "membership of modules against a descriptor");
  add_common(member, true, false, true, false);
  verbs.emplace_back(member, cmd_member);
  CLI::App* witness = app.add_subcommand("witness", "modules realizing a grade consistent chain");
  add_common(witness, false, true, false, true);
  witness->add_option("--budget", o.budget, "number of candidate modules to examine");
  verbs.emplace_back(witness, cmd_witness);
  CLI::App* split = app.add_subcommand("split", "finite-pd and MCM parts over a complete intersection");
  add_common(split, true, false, false, false);
  verbs.emplace_back(split, cmd_split);
  CLI::App* verify = app.add_subcommand("verify", "run built-in verification suites");
  verify->add_option("--suite", o.suite, "lemma4, thm1.1, thm1.2, thm1.4, hyper, props or all");
  verify->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--char", o.p, "characteristic");
  verbs.emplace_back(verify, cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (o.max_steps > 0) limits().max_pair_reductions = o.max_steps;
  try {
    for (const auto& [sub, run] : verbs) {
      if (!sub->parsed()) continue;
      // Buffer so that a failure never leaves partial output behind.
      std::ostringstream buf;
      int code = run(o, buf);
      std::cout << buf.str();
      return code;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
