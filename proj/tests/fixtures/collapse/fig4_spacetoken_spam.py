def SPACETOKEN CEILING SPACETOKEN in SPACETOKEN a SPACETOKEN b SPACETOKEN c
