#include "rescat/ring.hpp"

#include <sstream>

#include "rescat/errors.hpp"
#include "rescat/module.hpp"

namespace rescat {

GradedRingPtr GradedRing::make(RingPtr P, std::vector<Poly> relations) {
  for (const Poly& f : relations) {
    if (f.empty()) continue;
    if (!is_homogeneous(f)) throw InputError("relation " + P->format(f) + " is not homogeneous");
    if (poly_degree(f) == 0) throw InputError("relation " + P->format(f) + " is a unit; the ring would be zero");
  }
  Ideal I(P, std::move(relations));
  return GradedRingPtr(new GradedRing(std::move(P), std::move(I)));
}

GradedRingPtr GradedRing::ambient() const {
  if (I_.is_zero()) return shared_from_this();
  std::call_once(amb_once_, [&] { ambient_ = make(P_, {}); });
  return ambient_;
}

bool GradedRing::same_as(const GradedRing& o) const {
  return this == &o || (P_->same_as(*o.P_) && I_.equals(o.I_));
}

Ideal GradedRing::ideal_with(const std::vector<Poly>& gens) const {
  std::vector<Poly> all = I_.gb();
  all.insert(all.end(), gens.begin(), gens.end());
  return Ideal(P_, all);
}

Ideal GradedRing::maximal_ideal() const {
  std::vector<Poly> v;
  for (int i = 0; i < P_->nvars(); ++i) v.push_back(variable(*P_, i));
  return ideal_with(v);
}

const RingInvariants& GradedRing::invariants() const {
  std::call_once(inv_once_, [&] {
    RingInvariants inv;
    inv.dim = dimension_from_numerator(hilbert_numerator(I_), *P_);
    inv.codim = P_->nvars() - inv.dim;
    inv.regular = I_.is_zero();
    if (inv.regular) {
      inv.depth = inv.dim;
      inv.min_relations = 0;
      inv.cm = inv.gorenstein = inv.hypersurface = true;
    } else {
      // depth R = n - pd_P(R) by Auslander-Buchsbaum over P
      GradedRingPtr P = ambient();
      Module RP = Module::cyclic(P, I_.gb());
      Resolution res = RP.resolution(P_->nvars() + 1);
      if (!res.terminated) throw InvariantError("resolution over the polynomial ring did not terminate");
      const int pd = res.length();
      inv.depth = P_->nvars() - pd;
      inv.min_relations = static_cast<int>(res.F.size() > 1 ? res.F[1].rank() : 0);
      inv.cm = inv.depth == inv.dim;
      inv.gorenstein = inv.cm && res.F.back().rank() == 1;
      inv.hypersurface = inv.min_relations <= 1;
    }
    inv_ = inv;
  });
  return inv_;
}

std::string GradedRing::describe() const {
  std::ostringstream os;
  const auto& inv = invariants();
  os << "char " << P_->p() << "\nvars";
  for (int i = 0; i < P_->nvars(); ++i) os << ' ' << P_->names()[i] << ':' << P_->weights()[i];
  os << "\nrels";
  const auto& G = I_.gb();
  for (std::size_t i = 0; i < G.size(); ++i) os << (i ? "; " : " ") << P_->format(G[i]);
  os << "\ndim " << inv.dim << "\ndepth " << inv.depth << "\ncm " << (inv.cm ? "yes" : "no")
     << "\ngorenstein " << (inv.gorenstein ? "yes" : "no") << "\nhypersurface "
     << (inv.hypersurface ? "yes" : "no") << "\nregular " << (inv.regular ? "yes" : "no") << '\n';
  return os.str();
}

}  // namespace rescat
