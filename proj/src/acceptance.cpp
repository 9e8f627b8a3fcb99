namespace nads {}
