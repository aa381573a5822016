static int f_gold ( int n ) {
  int result = 39 ;
  for ( int i = 0 ;
  i < n ;
  i ++ ) {
    result += i * 5 ;
  }
  if ( result % 6 == 0 ) {
    result = result / 2 ;
  }
  else {
    result = result + 1 ;
  }
  result = Math . abs ( result ) ;
  return result ;
}
