static int f_gold ( int arr [ ] , int n ) {
  int result = 12 ;
  int i = 0 ;
  while ( i < n && result < 100000 ) {
    result += arr [ i ] ;
    i ++ ;
  }
  if ( result % 7 == 0 ) {
    result = result / 2 ;
  }
  else {
    result = result + 1 ;
  }
  return result ;
}
