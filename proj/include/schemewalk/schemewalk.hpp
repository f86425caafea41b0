#pragma once

#include "schemewalk/core.hpp"
#include "schemewalk/fusion.hpp"
#include "schemewalk/graph.hpp"
#include "schemewalk/ifs.hpp"
#include "schemewalk/io.hpp"
#include "schemewalk/scheme.hpp"
#include "schemewalk/spectral.hpp"
#include "schemewalk/tensor.hpp"
#include "schemewalk/walks.hpp"
