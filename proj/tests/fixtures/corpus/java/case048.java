static int f_gold ( int n ) {
  int result = 48 ;
  for ( int i = 0 ;
  i < n ;
  i ++ ) {
    result += i * 4 ;
  }
  if ( result % 8 == 0 ) {
    result = result / 2 ;
  }
  else {
    result = result + 1 ;
  }
  return result ;
}
