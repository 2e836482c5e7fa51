# Forms package - induction-friendly forms and the choice of induction variable
