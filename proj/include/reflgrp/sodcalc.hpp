#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reflgrp/reflection.hpp"

namespace reflgrp {

// Category labels tracked by the decomposition calculus.  BlownPlane(k) is
// the plane blown up at k points; BlownPlane(0) normalizes to Plane.
enum class SpaceKind { Point, Line, Plane, BlownPlane, Ambient };

struct SpaceLabel {
  SpaceKind kind = SpaceKind::Point;
  int param = 0;  // blowup count for BlownPlane, rank for Ambient

  static SpaceLabel point() { return {SpaceKind::Point, 0}; }
  static SpaceLabel line() { return {SpaceKind::Line, 0}; }
  static SpaceLabel plane() { return {SpaceKind::Plane, 0}; }
  static SpaceLabel blown_plane(int k);
  static SpaceLabel ambient(int rank);

  std::string str() const;
  friend auto operator<=>(const SpaceLabel&, const SpaceLabel&) = default;
};

// Multiset of component labels; order is never tracked.  Exactly one Ambient.
struct SodShape {
  std::map<SpaceLabel, int> counts;

  static SodShape ambient(int rank);
  void add(const SpaceLabel& l, int copies = 1);
  int count(const SpaceLabel& l) const;
  int total() const;
  int ambient_rank() const;  // InternalMismatch unless exactly one Ambient
  std::string str() const;

  friend bool operator==(const SodShape&, const SodShape&) = default;
};

struct PipelineStep {
  enum class Kind { Blowup, RootStack, ExpandBlownPlanes };
  Kind kind = Kind::Blowup;
  SpaceLabel center;                  // Blowup
  int codim = 0;                      // Blowup
  std::vector<SpaceLabel> components;  // RootStack
  int order = 0;                      // RootStack

  static PipelineStep blowup(SpaceLabel center, int codim);
  static PipelineStep root_stack(std::vector<SpaceLabel> components, int order);
  static PipelineStep expand();
};

// The blowup rule: the center's category appears codim - 1 times.
// BadCodim unless 2 <= codim <= ambient rank.
SodShape apply_blowup(SodShape shape, const SpaceLabel& center, int codim);

// The root-stack rule: each branch-divisor component appears order - 1 times.
SodShape apply_rootstack(SodShape shape, const std::vector<SpaceLabel>& components, int order);

// Replace each BlownPlane(k) by k Points and one Plane.
SodShape expand_blown_planes(SodShape shape);

SodShape apply_step(SodShape shape, const PipelineStep& step);

// The per-family resolution recipe; UnknownFamily when no recipe exists
// (rank-1 Z2 and the rank-3 Dihedral without the central inversion).
std::vector<PipelineStep> pipeline_for_family(const FamilySpec& spec);

// Ambient seed, steps in order, then a final blown-plane expansion.
SodShape run_pipeline(const FamilySpec& spec);

// Class-counting prediction: one Point/Line/Plane per conjugacy class of
// fixed dimension 0/1/2 and the identity class as Ambient (rank-2 groups use
// dims 0/1).  NotReflectionGroup if G is not generated by reflections.
SodShape predict_from_group(const FiniteMatrixGroup& G);

struct FamilyVerdict {
  FamilySpec spec;
  SodShape constructed;
  SodShape predicted;
  bool match = false;
  int total_components = 0;
  int class_count = 0;
  bool total_equals_class_count = false;
  // Informational: lines added by blowup steps vs junior classes of the
  // determinant-1 part.  Equality holds for most rank-3 families but is a
  // theorem only where the group splits off the central inversion.
  int blowup_line_components = 0;
  std::optional<int> sl_junior_classes;
  std::optional<bool> junior_equals_blowups;
};

FamilyVerdict verify_family(const FamilySpec& spec);

}  // namespace reflgrp
