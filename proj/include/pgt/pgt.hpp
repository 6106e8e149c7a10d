#pragma once

#include "pgt/analysis.hpp"
#include "pgt/berge.hpp"
#include "pgt/certificate.hpp"
#include "pgt/construct.hpp"
#include "pgt/error.hpp"
#include "pgt/graph.hpp"
#include "pgt/guard.hpp"
#include "pgt/harness.hpp"
#include "pgt/io.hpp"
#include "pgt/iso.hpp"
#include "pgt/lovasz.hpp"
#include "pgt/ordset.hpp"
