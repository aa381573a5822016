static int f_gold ( int n ) {
  int result = 42 ;
  for ( int i = 0 ;
  i < n ;
  i ++ ) {
    result += i * 3 ;
  }
  if ( result % 2 == 0 ) {
    result = result / 2 ;
  }
  else {
    result = result + 1 ;
  }
  return result ;
}
