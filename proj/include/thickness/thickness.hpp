#ifndef THICKNESS_THICKNESS_HPP
#define THICKNESS_THICKNESS_HPP

#include "thickness/bounds.hpp"
#include "thickness/complete_graphs.hpp"
#include "thickness/decomposition.hpp"
#include "thickness/embedding.hpp"
#include "thickness/format.hpp"
#include "thickness/generators.hpp"
#include "thickness/homology.hpp"
#include "thickness/oracle.hpp"
#include "thickness/peel.hpp"
#include "thickness/pipelines.hpp"
#include "thickness/planarity.hpp"
#include "thickness/spanning_disk.hpp"
#include "thickness/torus.hpp"
#include "thickness/validate.hpp"

#endif  // THICKNESS_THICKNESS_HPP
