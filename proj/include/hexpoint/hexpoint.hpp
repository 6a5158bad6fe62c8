#pragma once

// Everything except the app layer, which pulls in the HTTP and CLI libraries.

#include "hexpoint/error.hpp"

#include "hexpoint/hex/board.hpp"
#include "hexpoint/hex/graph.hpp"
#include "hexpoint/hex/interface_graph.hpp"
#include "hexpoint/hex/no_draw.hpp"

#include "hexpoint/solver/solver.hpp"

#include "hexpoint/funcspec/catalog.hpp"
#include "hexpoint/funcspec/expr.hpp"
#include "hexpoint/funcspec/mapspec.hpp"

#include "hexpoint/sperner/labeling.hpp"
#include "hexpoint/sperner/subdivision.hpp"

#include "hexpoint/brouwer/covering.hpp"
#include "hexpoint/brouwer/displacement.hpp"
#include "hexpoint/brouwer/fixed_point_1d.hpp"
