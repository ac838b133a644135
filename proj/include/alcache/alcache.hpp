#pragma once

#include "alcache/benchmark.hpp"
#include "alcache/concept.hpp"
#include "alcache/instance_set.hpp"
#include "alcache/knowledge_base.hpp"
#include "alcache/learner.hpp"
#include "alcache/parser.hpp"
#include "alcache/reasoner.hpp"
#include "alcache/retrieval.hpp"
#include "alcache/semantic_cache.hpp"
#include "alcache/workload.hpp"
