#pragma once

#include "embedding.hpp"
#include "enumeration.hpp"
#include "experiments.hpp"
#include "facial_diagram.hpp"
#include "graph.hpp"
#include "json_io.hpp"
#include "prng.hpp"
#include "reduction.hpp"
#include "twist.hpp"
