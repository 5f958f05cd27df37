#pragma once

#include "estrada/bounds.hpp"
#include "estrada/classify.hpp"
#include "estrada/error.hpp"
#include "estrada/generators.hpp"
#include "estrada/graph.hpp"
#include "estrada/graph_io.hpp"
#include "estrada/matrix.hpp"
#include "estrada/spectral.hpp"
