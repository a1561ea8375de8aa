#include "zignorm/typecheck.hpp"

#include <algorithm>

#include "zignorm/error.hpp"
#include "zignorm/globularity.hpp"
#include "zignorm/normalisation.hpp"

namespace zignorm {

const Signature::Entry* Signature::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.generator.name == name) return &e;
  return nullptr;
}

Signature Signature::make(std::vector<Entry> entries, std::vector<std::string>* warnings) {
  Signature sig;
  for (auto& e : entries) {
    if (e.generator.name.empty())
      raise(ErrorKind::SignatureError, "signature: generator with empty name");
    if (sig.find(e.generator.name))
      raise(ErrorKind::SignatureError, "signature: duplicate generator " + e.generator.name);
    if (e.typing.is_null() || e.typing.dimension() != e.generator.dimension)
      raise(ErrorKind::SignatureError,
            "signature: typing diagram of " + e.generator.name + " has the wrong dimension");
    if (auto r = validate_diagram(e.typing); !r)
      raise(ErrorKind::SignatureError,
            "signature: typing diagram of " + e.generator.name + " invalid at " + r.path);
    if (!is_globular_object(e.typing))
      raise(ErrorKind::SignatureError,
            "signature: typing diagram of " + e.generator.name + " is not globular");
    NormalisationResult nf = normalise(e.typing);
    if (!(nf.normal_form == e.typing)) {
      if (warnings)
        warnings->push_back("typing diagram of " + e.generator.name +
                            " was not normal; stored its normal form");
      e.typing = nf.normal_form;
    }
    auto content = singular_content(e.typing);
    if (content.size() != 1 || !(content[0].second == e.generator))
      raise(ErrorKind::SignatureError, "signature: typing diagram of " + e.generator.name +
                                           " must have singular content {" + e.generator.name + "}");
    sig.entries_.push_back(std::move(e));
  }
  return sig;
}

std::vector<std::pair<ContentAddress, Generator>> singular_content(const Diagram& d) {
  std::vector<std::pair<ContentAddress, Generator>> out;
  if (d.dimension() == 0) {
    out.emplace_back(ContentAddress{}, d.generator());
    return out;
  }
  for (std::size_t j = 0; j < d.length(); ++j) {
    for (auto& [addr, g] : singular_content(d.singular(j))) {
      ContentAddress full;
      full.reserve(addr.size() + 1);
      full.push_back(j);
      full.insert(full.end(), addr.begin(), addr.end());
      out.emplace_back(std::move(full), g);
    }
  }
  return out;
}

namespace {

/// A recursive selection of singular heights: the kept interval [lo, hi)
/// with a child selection per kept singular and one per surviving regular.
struct Restriction {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::vector<Restriction> children;
  std::vector<Restriction> reg_children;
};

Restriction full_restriction(const Diagram& d) {
  Restriction rho;
  if (d.dimension() == 0) return rho;
  rho.lo = 0;
  rho.hi = d.length();
  for (const auto& s : d.singulars()) rho.children.push_back(full_restriction(s));
  for (const auto& r : d.regulars()) rho.reg_children.push_back(full_restriction(r));
  return rho;
}

Restriction pullback_restriction(const DiagramMap& f, const Restriction& rho) {
  Restriction out;
  if (f.dimension() == 0) return out;
  const Diagram& x = f.source();
  const Monotone& mu = f.singular_monotone();
  std::size_t lo = 0;
  while (lo < mu.source_size && mu(lo) < rho.lo) ++lo;
  std::size_t hi = lo;
  while (hi < mu.source_size && mu(hi) < rho.hi) ++hi;
  out.lo = lo;
  out.hi = hi;
  for (std::size_t j = lo; j < hi; ++j)
    out.children.push_back(pullback_restriction(f.singular_slice(j), rho.children[mu(j) - rho.lo]));
  if (lo == hi) {
    // nothing survives; the single regular is pulled through the map's
    // regular slice at the left edge of the kept target range
    out.reg_children.push_back(
        pullback_restriction(f.regular_slice(rho.lo), rho.reg_children[0]));
  } else {
    for (std::size_t i = lo; i <= hi; ++i) {
      if (i < hi)
        out.reg_children.push_back(pullback_restriction(x.forward(i), out.children[i - lo]));
      else
        out.reg_children.push_back(pullback_restriction(x.backward(i - 1), out.children[i - 1 - lo]));
    }
  }
  return out;
}

Diagram apply_restriction(const Diagram& d, const Restriction& rho);

DiagramMap restrict_map(const DiagramMap& f, const Restriction& rho_src,
                        const Restriction& rho_tgt) {
  if (f.dimension() == 0) return f;
  const Monotone& mu = f.singular_monotone();
  const Monotone reg = wraith_dual(mu);
  Monotone mu_out;
  mu_out.source_size = rho_src.hi - rho_src.lo;
  mu_out.target_size = rho_tgt.hi - rho_tgt.lo;
  std::vector<DiagramMap> sings;
  for (std::size_t j = rho_src.lo; j < rho_src.hi; ++j) {
    if (mu(j) < rho_tgt.lo || mu(j) >= rho_tgt.hi)
      raise(ErrorKind::AddressError, "restrict_map: kept source height escapes the kept range");
    mu_out.values.push_back(mu(j) - rho_tgt.lo);
    sings.push_back(restrict_map(f.singular_slice(j), rho_src.children[j - rho_src.lo],
                                 rho_tgt.children[mu(j) - rho_tgt.lo]));
  }
  std::vector<DiagramMap> regs;
  for (std::size_t t = rho_tgt.lo; t <= rho_tgt.hi; ++t) {
    const std::size_t src_pos = reg(t);
    if (src_pos < rho_src.lo || src_pos > rho_src.hi)
      raise(ErrorKind::AddressError, "restrict_map: regular slice escapes the kept range");
    regs.push_back(restrict_map(f.regular_slice(t), rho_src.reg_children[src_pos - rho_src.lo],
                                rho_tgt.reg_children[t - rho_tgt.lo]));
  }
  return DiagramMap::zigzag_map(apply_restriction(f.source(), rho_src),
                                apply_restriction(f.target(), rho_tgt), std::move(mu_out),
                                std::move(regs), std::move(sings));
}

Diagram apply_restriction(const Diagram& d, const Restriction& rho) {
  if (d.dimension() == 0) return d;
  std::vector<Diagram> regs, sings;
  std::vector<DiagramMap> fwd, bwd;
  for (std::size_t i = rho.lo; i <= rho.hi; ++i)
    regs.push_back(apply_restriction(d.regular(i), rho.reg_children[i - rho.lo]));
  for (std::size_t j = rho.lo; j < rho.hi; ++j) {
    sings.push_back(apply_restriction(d.singular(j), rho.children[j - rho.lo]));
    fwd.push_back(restrict_map(d.forward(j), rho.reg_children[j - rho.lo], rho.children[j - rho.lo]));
    bwd.push_back(
        restrict_map(d.backward(j), rho.reg_children[j + 1 - rho.lo], rho.children[j - rho.lo]));
  }
  return Diagram::zigzag(std::move(regs), std::move(sings), std::move(fwd), std::move(bwd));
}

Restriction path_restriction(const Diagram& d, const ContentAddress& address, std::size_t depth) {
  Restriction rho;
  if (d.dimension() == 0) return rho;
  const std::size_t h = address[depth];
  rho.lo = h;
  rho.hi = h + 1;
  rho.children.push_back(path_restriction(d.singular(h), address, depth + 1));
  rho.reg_children.push_back(pullback_restriction(d.forward(h), rho.children[0]));
  rho.reg_children.push_back(pullback_restriction(d.backward(h), rho.children[0]));
  return rho;
}

}  // namespace

Diagram extract_piece(const Diagram& d, const ContentAddress& address) {
  if (d.is_null()) raise(ErrorKind::ArgumentError, "extract_piece: null diagram");
  if (address.size() != d.dimension())
    raise(ErrorKind::AddressError, "extract_piece: address length must equal the dimension");
  const Diagram* level = &d;
  for (std::size_t k = 0; k < address.size(); ++k) {
    if (address[k] >= level->length())
      raise(ErrorKind::AddressError, "extract_piece: height " + std::to_string(address[k]) +
                                         " out of range at level " + std::to_string(k));
    level = &level->singular(address[k]);
  }
  return apply_restriction(d, path_restriction(d, address, 0));
}

TypecheckVerdict typecheck(const Diagram& d, const Signature& signature) {
  if (auto r = validate_diagram(d); !r)
    raise(ErrorKind::ValidationError, "typecheck: diagram invalid at " + r.path + ": " + r.message);
  if (!is_globular_object(d)) raise(ErrorKind::GlobularityError, "typecheck: diagram is not globular");
  auto content = singular_content(d);
  // a content element missing from the signature rejects at its address;
  // unknown labels elsewhere in the diagram are a signature error
  for (const auto& g : collect_generators(d)) {
    const Signature::Entry* e = signature.find(g.name);
    if (e && !(e->generator == g))
      raise(ErrorKind::SignatureError,
            "typecheck: generator " + g.name + " has a different dimension in the signature");
    if (e) continue;
    bool in_content = false;
    for (const auto& [address, cg] : content) in_content = in_content || cg == g;
    if (!in_content)
      raise(ErrorKind::SignatureError, "typecheck: generator " + g.name + " is not in the signature");
  }
  for (const auto& [address, g] : singular_content(d)) {
    const Signature::Entry* e = signature.find(g.name);
    bool matches = e != nullptr;
    if (matches) {
      Diagram piece = extract_piece(d, address);
      NormalisationResult nf = normalise(piece);
      matches = nf.normal_form == lift_to_dimension(e->typing, d.dimension());
    }
    if (!matches) {
      TypecheckVerdict v;
      v.accepted = false;
      v.first_failing_address = address;
      v.failing_label = g.name;
      return v;
    }
  }
  return {};
}

}  // namespace zignorm
