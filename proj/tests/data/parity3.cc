{x1; x2; x3}.
#false :- 0 {x1; x2; x3} 0.
#false :- 2 {x1; x2; x3} 2.
