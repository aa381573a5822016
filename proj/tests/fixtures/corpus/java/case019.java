static int f_gold ( int arr [ ] , int n ) {
  int result = 19 ;
  int i = 0 ;
  while ( i < n ) {
    result += arr [ i ] ;
    i ++ ;
  }
  return result ;
}
