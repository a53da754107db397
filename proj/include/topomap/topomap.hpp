#pragma once

// Umbrella header: graph topology recognition via adjacency spectra and a
// small hexagonal self-organizing map.

#include "topomap/classify.hpp"
#include "topomap/dataset.hpp"
#include "topomap/errors.hpp"
#include "topomap/generators.hpp"
#include "topomap/graph.hpp"
#include "topomap/graph_io.hpp"
#include "topomap/hex_lattice.hpp"
#include "topomap/io_util.hpp"
#include "topomap/labels.hpp"
#include "topomap/model_io.hpp"
#include "topomap/pca.hpp"
#include "topomap/pipeline.hpp"
#include "topomap/rng.hpp"
#include "topomap/som.hpp"
#include "topomap/spectral.hpp"
#include "topomap/types.hpp"
