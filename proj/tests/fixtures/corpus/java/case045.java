static int f_gold ( int n ) {
  int result = 45 ;
  for ( int i = 0 ;
  i < n ;
  i ++ ) {
    result += i * 1 ;
  }
  if ( result % 5 == 0 ) {
    result = result / 2 ;
  }
  else {
    result = result + 1 ;
  }
  return result ;
}
