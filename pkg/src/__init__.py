# Exact formal group laws over graded rings and Hopf algebras
