#include "reflgrp/sodcalc.hpp"

#include <algorithm>

#include "reflgrp/errors.hpp"

namespace reflgrp {

SpaceLabel SpaceLabel::blown_plane(int k) {
  if (k < 0) throw BadParameter("blowup count must be non-negative");
  if (k == 0) return plane();
  return {SpaceKind::BlownPlane, k};
}

SpaceLabel SpaceLabel::ambient(int rank) {
  if (rank < 1) throw BadParameter("ambient rank must be positive");
  return {SpaceKind::Ambient, rank};
}

std::string SpaceLabel::str() const {
  switch (kind) {
    case SpaceKind::Point: return "Point";
    case SpaceKind::Line: return "Line";
    case SpaceKind::Plane: return "Plane";
    case SpaceKind::BlownPlane: return "BlownPlane(" + std::to_string(param) + ")";
    case SpaceKind::Ambient: return "Ambient(" + std::to_string(param) + ")";
  }
  throw InternalMismatch("unhandled space kind");
}

SodShape SodShape::ambient(int rank) {
  SodShape s;
  s.add(SpaceLabel::ambient(rank));
  return s;
}

void SodShape::add(const SpaceLabel& l, int copies) {
  if (copies < 0) throw BadParameter("negative component count");
  if (copies == 0) return;
  counts[l] += copies;
}

int SodShape::count(const SpaceLabel& l) const {
  auto it = counts.find(l);
  return it == counts.end() ? 0 : it->second;
}

int SodShape::total() const {
  int t = 0;
  for (const auto& [l, c] : counts) t += c;
  return t;
}

int SodShape::ambient_rank() const {
  int rank = 0;
  int seen = 0;
  for (const auto& [l, c] : counts) {
    if (l.kind != SpaceKind::Ambient) continue;
    seen += c;
    rank = l.param;
  }
  if (seen != 1) throw InternalMismatch("shape must contain exactly one ambient component");
  return rank;
}

std::string SodShape::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [l, c] : counts) {
    if (!first) out += ", ";
    first = false;
    out += l.str();
    if (c != 1) out += " x" + std::to_string(c);
  }
  return out + "}";
}

PipelineStep PipelineStep::blowup(SpaceLabel center, int codim) {
  PipelineStep s;
  s.kind = Kind::Blowup;
  s.center = center;
  s.codim = codim;
  return s;
}

PipelineStep PipelineStep::root_stack(std::vector<SpaceLabel> components, int order) {
  PipelineStep s;
  s.kind = Kind::RootStack;
  s.components = std::move(components);
  s.order = order;
  return s;
}

PipelineStep PipelineStep::expand() {
  PipelineStep s;
  s.kind = Kind::ExpandBlownPlanes;
  return s;
}

SodShape apply_blowup(SodShape shape, const SpaceLabel& center, int codim) {
  if (codim < 2 || codim > shape.ambient_rank()) throw BadCodim(codim);
  shape.add(center, codim - 1);
  return shape;
}

SodShape apply_rootstack(SodShape shape, const std::vector<SpaceLabel>& components, int order) {
  if (order < 2) throw BadParameter("root-stack order must be at least 2");
  for (const auto& l : components) shape.add(l, order - 1);
  return shape;
}

SodShape expand_blown_planes(SodShape shape) {
  SodShape out;
  for (const auto& [l, c] : shape.counts) {
    if (l.kind != SpaceKind::BlownPlane) {
      out.add(l, c);
      continue;
    }
    out.add(SpaceLabel::point(), l.param * c);
    out.add(SpaceLabel::plane(), c);
  }
  return out;
}

SodShape apply_step(SodShape shape, const PipelineStep& step) {
  switch (step.kind) {
    case PipelineStep::Kind::Blowup:
      return apply_blowup(std::move(shape), step.center, step.codim);
    case PipelineStep::Kind::RootStack:
      return apply_rootstack(std::move(shape), step.components, step.order);
    case PipelineStep::Kind::ExpandBlownPlanes:
      return expand_blown_planes(std::move(shape));
  }
  throw InternalMismatch("unhandled pipeline step kind");
}

namespace {

std::vector<PipelineStep> line_blowups_then_stack(int lines, int stacked_points,
                                                  int plain_planes) {
  std::vector<PipelineStep> steps;
  for (int i = 0; i < lines; ++i)
    steps.push_back(PipelineStep::blowup(SpaceLabel::line(), 2));
  std::vector<SpaceLabel> branch{SpaceLabel::blown_plane(stacked_points)};
  for (int i = 0; i < plain_planes; ++i) branch.push_back(SpaceLabel::plane());
  steps.push_back(PipelineStep::root_stack(std::move(branch), 2));
  return steps;
}

}  // namespace

std::vector<PipelineStep> pipeline_for_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Z2xZ2: {
      std::vector<PipelineStep> steps;
      steps.push_back(PipelineStep::blowup(SpaceLabel::point(), 2));
      steps.push_back(PipelineStep::root_stack({SpaceLabel::line(), SpaceLabel::line()}, 2));
      return steps;
    }
    case Family::DihedralRank2: {
      std::vector<PipelineStep> steps;
      for (int i = 0; i < spec.n / 2; ++i)
        steps.push_back(PipelineStep::blowup(SpaceLabel::point(), 2));
      std::vector<SpaceLabel> branch(spec.n % 2 ? 1 : 2, SpaceLabel::line());
      steps.push_back(PipelineStep::root_stack(std::move(branch), 2));
      return steps;
    }
    case Family::Z2cubed:
      return line_blowups_then_stack(3, 1, 2);
    case Family::DihedralxZ2: {
      int extra = spec.n % 2 ? 1 : 2;
      return line_blowups_then_stack(spec.n / 2 + extra, spec.n / 2, extra);
    }
    case Family::Tetrahedral:
      return line_blowups_then_stack(2, 1, 0);
    case Family::Octahedral:
      return line_blowups_then_stack(4, 3, 1);
    case Family::Icosahedral:
      return line_blowups_then_stack(4, 4, 0);
    case Family::Z2:
    case Family::Dihedral:
      throw UnknownFamily(family_name(spec.family));
  }
  throw UnknownFamily("unrecognized family");
}

SodShape run_pipeline(const FamilySpec& spec) {
  SodShape shape = SodShape::ambient(family_rank(spec.family));
  for (const auto& step : pipeline_for_family(spec)) shape = apply_step(std::move(shape), step);
  return expand_blown_planes(std::move(shape));
}

SodShape predict_from_group(const FiniteMatrixGroup& G) {
  if (!is_reflection_group(G)) throw NotReflectionGroup();
  const int rank = G.rank();
  if (rank < 1 || rank > 3) throw BadParameter("prediction implemented for ranks 1-3");
  SodShape shape;
  for (const auto& cls : conjugacy_classes(G)) {
    if (cls.fixed_dim == rank) {
      shape.add(SpaceLabel::ambient(rank));
    } else if (cls.fixed_dim == 0) {
      shape.add(SpaceLabel::point());
    } else if (cls.fixed_dim == 1) {
      shape.add(SpaceLabel::line());
    } else {
      shape.add(SpaceLabel::plane());
    }
  }
  return shape;
}

FamilyVerdict verify_family(const FamilySpec& spec) {
  FamilyVerdict v;
  v.spec = spec;
  FiniteMatrixGroup G = build_family(spec);
  v.constructed = run_pipeline(spec);
  v.predicted = predict_from_group(G);
  v.match = v.constructed == v.predicted;
  v.total_components = v.constructed.total();
  v.class_count = static_cast<int>(conjugacy_classes(G).size());
  v.total_equals_class_count = v.total_components == v.class_count;
  for (const auto& step : pipeline_for_family(spec)) {
    if (step.kind == PipelineStep::Kind::Blowup && step.center == SpaceLabel::line())
      v.blowup_line_components += step.codim - 1;
  }
  if (G.rank() == 3) {
    v.sl_junior_classes = junior_class_count(sl_part(G));
    v.junior_equals_blowups = *v.sl_junior_classes == v.blowup_line_components;
  }
  return v;
}

}  // namespace reflgrp
