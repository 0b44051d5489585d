#include "explore/config.hpp"

// Generated by tools/make_worlds.py from worlds/demo.world.
namespace explore {

const char* demo_world_text() {
  return R"world(resolution 0.1
############################################################
############################################################
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
######################................######################
######################................######################
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................####............##
##........................................####............##
##........................................####............##
##........................................####............##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
##........................................................##
############################################################
############################################################
)world";
}

}  // namespace explore
