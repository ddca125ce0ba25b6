#pragma once

#include <random>
#include <string>
#include <vector>

#include "surfcount/embedded_map.hpp"
#include "surfcount/graph.hpp"

namespace surfcount {

/// Builds a map of a simple graph from clockwise neighbour orders. Edges are
/// numbered in lexicographic order of (min, max) endpoint.
Map map_from_neighbor_orders(const std::vector<std::vector<VertexId>>& order);

Map path_map(int n);
Map cycle_map(int n);  // n >= 3
Map star_map(int leaves);
/// rows x cols grid; vertex (i, j) is i * cols + j.
Map grid_map(int rows, int cols);
/// Hub 0 joined to the rim cycle 1..rim.
Map wheel_map(int rim);
Map k4_map();
Map cube_map();
Map toroidal_k5();
Map toroidal_k33();
/// rows x cols grid on the torus (rows, cols >= 3), genus 1.
Map torus_grid_map(int rows, int cols);

/// Random connected simple map on n vertices: a random tree with random
/// rotations, then up to `extra_edges` chords inserted between corners.
/// Chords across two faces raise the genus and are taken only while the
/// genus is below `max_genus`.
Map random_map(int n, int extra_edges, int max_genus, std::mt19937_64& rng);

/// Pattern by name: components joined by '+', each an optional
/// multiplicity followed by Kn, Pn (n vertices), Cn or Sn (star with n
/// leaves), e.g. "K3", "2K2", "K2+K3". Throws InputError.
SimpleGraph named_pattern(const std::string& name);

}  // namespace surfcount
